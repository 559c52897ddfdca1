#include "hecke/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace hecke {

std::string LatticeElt::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << ")";
    return os.str();
}

std::string to_string(LatticeKind k) {
    switch (k) {
        case LatticeKind::sc: return "sc";
        case LatticeKind::ad: return "ad";
        case LatticeKind::gl: return "gl";
        case LatticeKind::custom: return "custom";
    }
    return "?";
}

std::pair<char, int> parse_cartan_label(const std::string& label) {
    if (label.size() < 2) throw InvalidCartanError("bad Cartan label: " + label);
    char fam = label[0];
    int n = 0;
    for (size_t i = 1; i < label.size(); ++i) {
        if (!isdigit(static_cast<unsigned char>(label[i])))
            throw InvalidCartanError("bad Cartan label: " + label);
        n = n * 10 + (label[i] - '0');
    }
    if (fam == 'A' && n >= 1 && n <= 9) return {fam, n};
    if ((fam == 'B' || fam == 'C') && n == 2) return {fam, n};
    if (fam == 'G' && n == 2) return {fam, n};
    throw InvalidCartanError("unsupported Cartan type: " + label);
}

namespace {

// M[i][j] = alpha_i(alpha_j^vee)
std::vector<IntVec> cartan_matrix(char fam, int n) {
    std::vector<IntVec> M(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) M[i][i] = 2;
    if (fam == 'A') {
        for (int i = 0; i + 1 < n; ++i) {
            M[i][i + 1] = -1;
            M[i + 1][i] = -1;
        }
    } else if (fam == 'B') {
        // alpha_1 long, alpha_2 short
        M[0][1] = -2;
        M[1][0] = -1;
    } else if (fam == 'C') {
        M[0][1] = -1;
        M[1][0] = -2;
    } else if (fam == 'G') {
        M[0][1] = -1;
        M[1][0] = -3;
    }
    return M;
}

// finite type <=> symmetrizable with positive definite symmetrization
bool cartan_is_finite_type(const std::vector<IntVec>& M) {
    int n = static_cast<int>(M.size());
    for (int i = 0; i < n; ++i) {
        if (M[i][i] != 2) return false;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (M[i][j] > 0) return false;
            if ((M[i][j] == 0) != (M[j][i] == 0)) return false;
        }
    }
    // symmetrizer by propagation along the graph
    std::vector<Rat> dsym(n, 0);
    for (int start = 0; start < n; ++start) {
        if (dsym[start] != 0) continue;
        dsym[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (M[i][j] == 0 || i == j) continue;
                Rat need = dsym[i] * Rat(M[i][j]) / Rat(M[j][i]);
                if (dsym[j] == 0) {
                    dsym[j] = need;
                    queue.push_back(j);
                } else if (dsym[j] != need) {
                    return false;
                }
            }
        }
    }
    // leading principal minors of D*M must be positive
    std::vector<std::vector<Rat>> S(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) S[i][j] = dsym[i] * Rat(M[i][j]);
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Rat>> A(k, std::vector<Rat>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) A[i][j] = S[i][j];
        // determinant by fraction-free-ish Gaussian elimination
        Rat det = 1;
        for (int col = 0; col < k; ++col) {
            int piv = -1;
            for (int row = col; row < k; ++row)
                if (A[row][col] != 0) {
                    piv = row;
                    break;
                }
            if (piv < 0) return false;
            if (piv != col) {
                std::swap(A[piv], A[col]);
                det = -det;
            }
            det *= A[col][col];
            for (int row = col + 1; row < k; ++row) {
                Rat f = A[row][col] / A[col][col];
                for (int j = col; j < k; ++j) A[row][j] -= f * A[col][j];
            }
        }
        if (det <= 0) return false;
    }
    return true;
}

constexpr int kMaxRoots = 4096;
constexpr int kMaxWeyl = 100000;

}  // namespace

RootDatum RootDatum::build(const std::string& cartan_type, LatticeKind lattice,
                           const std::optional<CustomRootData>& custom) {
    RootDatum rd;
    rd.type_ = cartan_type;
    rd.lattice_ = lattice;

    if (lattice == LatticeKind::custom) {
        if (!custom) throw InvalidCartanError("custom lattice requires root data");
        rd.simple_roots_ = custom->simple_roots;
        rd.simple_coroots_ = custom->simple_coroots;
        rd.rank_ = static_cast<int>(rd.simple_roots_.size());
        if (rd.rank_ == 0 || rd.simple_coroots_.size() != rd.simple_roots_.size())
            throw InvalidCartanError("custom data: need equally many roots and coroots");
        rd.dim_ = static_cast<int>(rd.simple_roots_[0].size());
        for (const auto& v : rd.simple_roots_)
            if (static_cast<int>(v.size()) != rd.dim_)
                throw InvalidCartanError("custom data: ragged simple roots");
        for (const auto& v : rd.simple_coroots_)
            if (static_cast<int>(v.size()) != rd.dim_)
                throw InvalidCartanError("custom data: ragged simple coroots");
    } else {
        auto [fam, n] = parse_cartan_label(cartan_type);
        int r = (fam == 'A') ? n : 2;
        auto M = cartan_matrix(fam, r);
        rd.rank_ = r;
        if (lattice == LatticeKind::gl) {
            if (fam != 'A') throw IncompatibleLatticeError("gl lattice requires type A");
            // X = Z^n, roots e_i - e_{i+1}
            rd.dim_ = n + 1;
            for (int i = 0; i < r; ++i) {
                IntVec root(rd.dim_, 0), coroot(rd.dim_, 0);
                root[i] = 1;
                root[i + 1] = -1;
                coroot[i] = 1;
                coroot[i + 1] = -1;
                rd.simple_roots_.push_back(root);
                rd.simple_coroots_.push_back(coroot);
            }
        } else if (lattice == LatticeKind::sc) {
            // X = coroot lattice; basis = simple coroots
            rd.dim_ = r;
            for (int i = 0; i < r; ++i) {
                IntVec coroot(r, 0);
                coroot[i] = 1;
                rd.simple_coroots_.push_back(coroot);
                rd.simple_roots_.push_back(M[i]);  // row i: alpha_i(e_j) = M[i][j]
            }
        } else {  // ad: X = coweight lattice; basis dual to the simple roots
            rd.dim_ = r;
            for (int i = 0; i < r; ++i) {
                IntVec root(r, 0), coroot(r, 0);
                root[i] = 1;
                for (int j = 0; j < r; ++j) coroot[j] = M[j][i];  // column i
                rd.simple_roots_.push_back(root);
                rd.simple_coroots_.push_back(coroot);
            }
        }
    }

    rd.validate_cartan();

    rd.simple_refl_.reserve(rd.rank_);
    for (int i = 0; i < rd.rank_; ++i) {
        WeylElt s = WeylElt::identity(rd.dim_);
        for (int a = 0; a < rd.dim_; ++a)
            for (int b = 0; b < rd.dim_; ++b)
                s.at(a, b) -= rd.simple_coroots_[i][a] * rd.simple_roots_[i][b];
        rd.simple_refl_.push_back(std::move(s));
    }

    rd.generate_roots();
    rd.enumerate_weyl();
    return rd;
}

void RootDatum::validate_cartan() const {
    std::vector<IntVec> M(rank_, IntVec(rank_, 0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            M[i][j] = pairing(simple_roots_[i], LatticeElt(simple_coroots_[j]));
    for (int i = 0; i < rank_; ++i)
        if (M[i][i] != 2)
            throw InvalidCartanError("alpha_i(alpha_i^vee) must be 2, got " +
                                     std::to_string(M[i][i]));
    if (!cartan_is_finite_type(M))
        throw InvalidCartanError("pairing matrix is not a finite-type Cartan matrix");
}

void RootDatum::generate_roots() {
    // orbit closure of the simple roots under the simple reflections,
    // tracked as (coefficients in simple roots, covector, coroot vector)
    struct Root {
        IntVec coeff, cov, cor;
    };
    std::map<IntVec, Root> seen;  // keyed by coefficient vector
    std::deque<IntVec> work;
    for (int i = 0; i < rank_; ++i) {
        Root r;
        r.coeff.assign(rank_, 0);
        r.coeff[i] = 1;
        r.cov = simple_roots_[i];
        r.cor = simple_coroots_[i];
        seen[r.coeff] = r;
        work.push_back(r.coeff);
    }
    while (!work.empty()) {
        Root r = seen[work.front()];
        work.pop_front();
        for (int i = 0; i < rank_; ++i) {
            // s_i(beta) = beta - beta(alpha_i^vee) alpha_i, same on coroots
            i64 pr = pairing(r.cov, LatticeElt(simple_coroots_[i]));
            i64 pc = pairing(simple_roots_[i], LatticeElt(r.cor));
            Root img;
            img.coeff = r.coeff;
            img.coeff[i] -= pr;
            img.cov = r.cov;
            img.cor = r.cor;
            for (int j = 0; j < dim_; ++j) {
                img.cov[j] -= pr * simple_roots_[i][j];
                img.cor[j] -= pc * simple_coroots_[i][j];
            }
            if (!seen.count(img.coeff)) {
                if (static_cast<int>(seen.size()) >= kMaxRoots)
                    throw InvalidCartanError("root system did not close");
                seen[img.coeff] = img;
                work.push_back(img.coeff);
            }
        }
    }
    i64 best_height = -1;
    for (const auto& [coeff, r] : seen) {
        bool nonneg = std::all_of(coeff.begin(), coeff.end(), [](i64 v) { return v >= 0; });
        if (!nonneg) continue;
        pos_roots_.push_back(r.cov);
        pos_coroots_.push_back(r.cor);
        pos_root_coeffs_.push_back(coeff);
        i64 height = 0;
        for (i64 v : coeff) height += v;
        if (height > best_height) {
            best_height = height;
            highest_ = static_cast<int>(pos_roots_.size()) - 1;
        }
    }
    if (seen.size() != 2 * pos_roots_.size())
        throw InvalidCartanError("root system is not symmetric under negation");

    rho_.assign(dim_, 0);
    IntVec d0(dim_, 0);
    for (size_t t = 0; t < pos_roots_.size(); ++t)
        for (int j = 0; j < dim_; ++j) {
            rho_[j] += pos_roots_[t][j];
            d0[j] += pos_coroots_[t][j];
        }
    d0_ = LatticeElt(d0);

    for (size_t t = 0; t < pos_coroots_.size(); ++t) {
        coroot_index_[pos_coroots_[t]] = {static_cast<int>(t), +1};
        IntVec neg = pos_coroots_[t];
        for (auto& v : neg) v = -v;
        coroot_index_[neg] = {static_cast<int>(t), -1};
    }
}

void RootDatum::enumerate_weyl() {
    // BFS by length; lex-least words assembled level by level
    WeylElt id = WeylElt::identity(dim_);
    weyl_.push_back(id);
    words_[id] = {};
    std::vector<WeylElt> level{id};
    while (!level.empty()) {
        std::set<WeylElt> next;
        for (const auto& w : level)
            for (int i = 0; i < rank_; ++i) {
                WeylElt u = simple_refl_[i] * w;
                if (!words_.count(u)) next.insert(u);
            }
        std::vector<WeylElt> next_level;
        for (const auto& u : next) {
            if (static_cast<int>(weyl_.size()) >= kMaxWeyl)
                throw InvalidCartanError("Weyl group too large");
            // least left descent gives the lex-least word
            for (int i = 0; i < rank_; ++i) {
                WeylElt parent = simple_refl_[i] * u;
                auto it = words_.find(parent);
                if (it != words_.end()) {
                    std::vector<int> word{i + 1};
                    word.insert(word.end(), it->second.begin(), it->second.end());
                    words_[u] = std::move(word);
                    break;
                }
            }
            weyl_.push_back(u);
            next_level.push_back(u);
        }
        level = std::move(next_level);
    }
}

WeylElt RootDatum::reflection(int t) const {
    WeylElt s = WeylElt::identity(dim_);
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b) s.at(a, b) -= pos_coroots_[t][a] * pos_roots_[t][b];
    return s;
}

int RootDatum::finite_length(const WeylElt& w) const {
    auto it = words_.find(w);
    if (it == words_.end()) throw Error("finite_length: not a Weyl element of this datum");
    return static_cast<int>(it->second.size());
}

const std::vector<int>& RootDatum::reduced_word(const WeylElt& w) const {
    auto it = words_.find(w);
    if (it == words_.end()) throw Error("reduced_word: not a Weyl element of this datum");
    return it->second;
}

WeylElt RootDatum::weyl_inverse(const WeylElt& w) const {
    const auto& word = reduced_word(w);
    WeylElt inv = WeylElt::identity(dim_);
    for (auto it = word.rbegin(); it != word.rend(); ++it) inv = inv * simple_refl_[*it - 1];
    return inv;
}

WeylElt RootDatum::word_to_weyl(const std::vector<int>& word) const {
    WeylElt w = WeylElt::identity(dim_);
    for (int letter : word) {
        if (letter < 1 || letter > rank_)
            throw ParseError("Weyl word letter out of range: " + std::to_string(letter));
        w = w * simple_refl_[letter - 1];
    }
    return w;
}

std::pair<int, int> RootDatum::coroot_image(const WeylElt& w, int t) const {
    auto it = coroot_index_.find(w.apply(coroot_elt(t)).c);
    if (it == coroot_index_.end())
        throw Error("coroot_image: matrix does not permute the coroots");
    return it->second;
}

bool RootDatum::is_dominant(const LatticeElt& x) const {
    for (int i = 0; i < rank_; ++i)
        if (simple_pairing(i, x) < 0) return false;
    return true;
}

std::pair<LatticeElt, LatticeElt> RootDatum::decompose_dominant(const LatticeElt& x) const {
    // alpha_i(d0) = 2 for every simple i, so m = max over i of ceil(-alpha_i(x)/2)
    i64 m = 0;
    for (int i = 0; i < rank_; ++i) {
        i64 p = simple_pairing(i, x);
        if (p < 0) m = std::max(m, (-p + 1) / 2);
    }
    LatticeElt z = m * d0_;
    return {x + z, z};
}

}  // namespace hecke
