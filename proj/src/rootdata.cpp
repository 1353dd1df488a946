#include "modlie/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "modlie/liealgebra.hpp"

namespace modlie::rootdata {

namespace {

struct TypeData {
    int rank;
    std::vector<std::vector<int>> cartan;
};

TypeData type_data(const std::string& label) {
    if (label == "A1") return {1, {{2}}};
    if (label == "A2") return {2, {{2, -1}, {-1, 2}}};
    if (label == "B2") return {2, {{2, -1}, {-2, 2}}};
    if (label == "G2") return {2, {{2, -3}, {-1, 2}}};
    if (label == "F4")
        return {4, {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}};
    throw std::invalid_argument("build_root_datum: unsupported type '" + label + "'");
}

std::vector<int> symmetrizer(const std::vector<std::vector<int>>& cartan) {
    const int n = static_cast<int>(cartan.size());
    // d_i * a_ij = d_j * a_ji; propagate along the Dynkin graph, then clear
    // denominators. Numerators stay tiny for the supported types.
    std::vector<std::pair<long long, long long>> d(n, {0, 1}); // rationals
    d[0] = {1, 1};
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || cartan[i][j] == 0 || d[i].first == 0 || d[j].first != 0) continue;
                // d_j = d_i * a_ij / a_ji
                d[j] = {d[i].first * cartan[i][j], d[i].second * cartan[j][i]};
                changed = true;
            }
    }
    long long lcm_den = 1;
    for (auto& [num, den] : d) {
        if (num == 0) throw std::invalid_argument("symmetrizer: disconnected Cartan matrix");
        if (den < 0) { den = -den; num = -num; }
        const long long g = std::gcd(std::abs(num), den);
        num /= g;
        den /= g;
        lcm_den = std::lcm(lcm_den, den);
    }
    std::vector<int> out(n);
    long long g_all = 0;
    for (int i = 0; i < n; ++i) {
        const long long v = d[i].first * (lcm_den / d[i].second);
        out[i] = static_cast<int>(v);
        g_all = std::gcd(g_all, std::abs(v));
    }
    for (int& v : out) v = static_cast<int>(v / g_all);
    return out;
}

RootVec vec_negate(const RootVec& v) {
    RootVec r = v;
    for (int& x : r) x = -x;
    return r;
}

RootVec vec_plus(const RootVec& a, const RootVec& b) {
    RootVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

RootVec vec_minus(const RootVec& a, const RootVec& b) {
    RootVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

/// max k >= 0 with b - k*a a root (the down-string length p_{a,b}).
int down_string(const RootDatum& rd, const RootVec& a, const RootVec& b) {
    int k = 1;
    RootVec v = vec_minus(b, a);
    while (rd.is_root(v)) {
        ++k;
        v = vec_minus(v, a);
    }
    return k - 1;
}

long long exact_div(long long num, long long den, const char* what) {
    if (den == 0 || num % den != 0)
        throw std::runtime_error(std::string("chevalley constants: non-exact division in ") + what);
    return num / den;
}

/// Structure constant N_{mu,nu} for arbitrary roots with mu+nu a root,
/// reduced to the positive-pair table via the standard reflection relations.
long long n_general(const RootDatum& rd, const std::vector<std::vector<long long>>& npos,
                    const RootVec& mu, const RootVec& nu) {
    const RootVec sigma = vec_plus(mu, nu);
    if (!rd.is_root(sigma)) return 0;
    const int imu = rd.signed_index(mu), inu = rd.signed_index(nu);
    if (imu > 0 && inu > 0) return npos[imu - 1][inu - 1];
    if (imu < 0 && inu < 0) return -npos[-imu - 1][-inu - 1];
    if (imu < 0) return -n_general(rd, npos, nu, mu);
    // mu positive, nu negative; delta = -nu, sigma = mu - delta
    const RootVec delta = vec_negate(nu);
    const int isig = rd.signed_index(sigma);
    if (isig > 0) {
        // triple (mu, nu, -sigma): N_{mu,nu}/(sigma,sigma) = N_{nu,-sigma}/(mu,mu)
        const int idel = rd.signed_index(delta);
        const long long n = -npos[idel - 1][isig - 1]; // N_{-delta,-sigma} with delta+sigma = mu
        return exact_div(n * rd.length_sq(sigma), rd.length_sq(mu), "mixed pair");
    }
    return -n_general(rd, npos, vec_negate(mu), vec_negate(nu));
}

} // namespace

std::vector<RootVec> RootDatum::all_roots() const {
    std::vector<RootVec> out = positive_roots;
    out.reserve(2 * positive_roots.size());
    for (const RootVec& v : positive_roots) out.push_back(vec_negate(v));
    return out;
}

int RootDatum::signed_index(const RootVec& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? 0 : it->second;
}

long long RootDatum::bilinear(const RootVec& a, const RootVec& b) const {
    long long s = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            s += static_cast<long long>(a[i]) * sym_d[i] * cartan[i][j] * b[j];
    return s;
}

long long RootDatum::cartan_pairing(const RootVec& beta, int i) const {
    long long s = 0;
    for (int j = 0; j < rank; ++j) s += static_cast<long long>(cartan[i][j]) * beta[j];
    return s;
}

int RootDatum::height(const RootVec& v) {
    int h = 0;
    for (int x : v) h += x;
    return h;
}

RootDatum build_root_datum(const std::string& type_label) {
    const TypeData td = type_data(type_label);
    RootDatum rd;
    rd.type_label = type_label;
    rd.rank = td.rank;
    rd.cartan = td.cartan;
    rd.sym_d = symmetrizer(td.cartan);

    // close the simple roots under root-string addition, level by level
    std::set<RootVec> found;
    std::vector<RootVec> frontier;
    for (int i = 0; i < rd.rank; ++i) {
        RootVec a(rd.rank, 0);
        a[i] = 1;
        found.insert(a);
        frontier.push_back(a);
    }
    auto is_found = [&](const RootVec& v) { return found.count(v) != 0; };
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const RootVec& beta : frontier) {
            for (int i = 0; i < rd.rank; ++i) {
                RootVec alpha(rd.rank, 0);
                alpha[i] = 1;
                // down-string length within the set built so far (all shorter roots known)
                int r = 0;
                RootVec v = vec_minus(beta, alpha);
                while (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; }) &&
                       is_found(v)) {
                    ++r;
                    v = vec_minus(v, alpha);
                }
                const long long q = r - rd.cartan_pairing(beta, i);
                if (q > 0) {
                    RootVec up = vec_plus(beta, alpha);
                    if (found.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }

    rd.positive_roots.assign(found.begin(), found.end());
    std::sort(rd.positive_roots.begin(), rd.positive_roots.end(),
              [](const RootVec& a, const RootVec& b) {
                  const int ha = RootDatum::height(a), hb = RootDatum::height(b);
                  return ha != hb ? ha < hb : a < b;
              });
    for (std::size_t i = 0; i < rd.positive_roots.size(); ++i) {
        rd.index_[rd.positive_roots[i]] = static_cast<int>(i) + 1;
        rd.index_[vec_negate(rd.positive_roots[i])] = -(static_cast<int>(i) + 1);
    }
    return rd;
}

std::optional<std::size_t> ChevalleyBasis::index_of_label(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    return std::nullopt;
}

long long ChevalleyBasis::basis_degree(std::size_t b, const std::vector<long long>& weights) const {
    const std::size_t m = rd.num_positive();
    if (b >= 2 * m) return 0;
    const RootVec& root = rd.positive_roots[b < m ? b : b - m];
    long long deg = 0;
    for (int i = 0; i < rd.rank; ++i) deg += weights[i] * root[i];
    return b < m ? deg : -deg;
}

ChevalleyBasis chevalley_structure_constants(const RootDatum& rd) {
    const std::size_t m = rd.num_positive();
    const auto mi = static_cast<int>(m);

    // positive-pair constants by induction on the height of the sum
    std::vector<std::vector<long long>> npos(m, std::vector<long long>(m, 0));
    for (int g = 0; g < mi; ++g) {
        const RootVec& gamma = rd.positive_roots[static_cast<std::size_t>(g)];
        if (RootDatum::height(gamma) < 2) continue;
        std::vector<std::pair<int, int>> pairs; // (x, y), x < y, sorted by x
        for (int x = 0; x < mi; ++x) {
            const RootVec rest = vec_minus(gamma, rd.positive_roots[static_cast<std::size_t>(x)]);
            const int y = rd.signed_index(rest);
            if (y > 0 && y - 1 > x) pairs.emplace_back(x, y - 1);
        }
        if (pairs.empty()) throw std::runtime_error("chevalley constants: no special pair");
        const auto [a, b] = pairs.front(); // extraspecial: minimal first root
        const RootVec &ra = rd.positive_roots[static_cast<std::size_t>(a)],
                      &rb = rd.positive_roots[static_cast<std::size_t>(b)];
        npos[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = down_string(rd, ra, rb) + 1;
        npos[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
            -npos[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        for (std::size_t t = 1; t < pairs.size(); ++t) {
            const auto [x, y] = pairs[t];
            const RootVec &rx = rd.positive_roots[static_cast<std::size_t>(x)],
                          &ry = rd.positive_roots[static_cast<std::size_t>(y)];
            // quadruple (ra, rb, -rx, -ry) sums to zero, no two opposite:
            //   N(ra,rb)N(-rx,-ry)/(gamma,gamma)
            // + N(rb,-rx)N(ra,-ry)/(rb-rx,rb-rx)
            // + N(-rx,ra)N(rb,-ry)/(ra-rx,ra-rx) = 0
            long long n2a = n_general(rd, npos, rb, vec_negate(rx));
            long long n2b = n_general(rd, npos, ra, vec_negate(ry));
            long long n3a = n_general(rd, npos, vec_negate(rx), ra);
            long long n3b = n_general(rd, npos, rb, vec_negate(ry));
            long long d2 = (n2a && n2b) ? rd.length_sq(vec_minus(rb, rx)) : 1;
            long long d3 = (n3a && n3b) ? rd.length_sq(vec_minus(ra, rx)) : 1;
            // N(rx,ry) = (gamma,gamma) * (T2 + T3) / N(ra,rb)
            const long long num = (n2a * n2b * d3 + n3a * n3b * d2) * rd.length_sq(gamma);
            const long long den =
                d2 * d3 * npos[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            const long long val = exact_div(num, den, "special pair");
            npos[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = val;
            npos[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = -val;
        }
    }

    ChevalleyBasis cb;
    cb.rd = rd;
    cb.dim = 2 * m + static_cast<std::size_t>(rd.rank);
    cb.labels.reserve(cb.dim);
    auto coeff_string = [&](const RootVec& v) {
        std::string s;
        for (int x : v) s += std::to_string(x);
        return s;
    };
    for (std::size_t i = 0; i < m; ++i) cb.labels.push_back("e" + coeff_string(rd.positive_roots[i]));
    for (std::size_t i = 0; i < m; ++i) cb.labels.push_back("f" + coeff_string(rd.positive_roots[i]));
    for (int l = 0; l < rd.rank; ++l) cb.labels.push_back("h" + std::to_string(l + 1));

    // signed root of basis vector b, or empty for Cartan elements
    auto root_of = [&](std::size_t b) -> RootVec {
        if (b < m) return rd.positive_roots[b];
        return vec_negate(rd.positive_roots[b - m]);
    };
    auto basis_of_root = [&](const RootVec& v) -> std::size_t {
        const int si = rd.signed_index(v);
        return si > 0 ? static_cast<std::size_t>(si - 1) : m + static_cast<std::size_t>(-si - 1);
    };

    cb.int_table.assign(cb.dim * cb.dim, {});
    auto set_pair = [&](std::size_t i, std::size_t j, SparseIntRow row) {
        SparseIntRow neg = row;
        for (auto& [k, c] : neg) c = -c;
        cb.int_table[i * cb.dim + j] = std::move(row);
        cb.int_table[j * cb.dim + i] = std::move(neg);
    };

    for (std::size_t i = 0; i < cb.dim; ++i) {
        for (std::size_t j = i + 1; j < cb.dim; ++j) {
            SparseIntRow row;
            const bool hi = i >= 2 * m, hj = j >= 2 * m;
            if (hi && hj) {
                set_pair(i, j, {});
                continue;
            }
            if (hj) { // [x_mu, h_l] = -<mu, alpha_l^vee> x_mu
                const RootVec mu = root_of(i);
                const long long c = -rd.cartan_pairing(mu, static_cast<int>(j - 2 * m));
                if (c) row.emplace_back(static_cast<std::uint32_t>(i), c);
                set_pair(i, j, std::move(row));
                continue;
            }
            const RootVec mu = root_of(i), nu = root_of(j);
            const RootVec sig = vec_plus(mu, nu);
            if (std::all_of(sig.begin(), sig.end(), [](int x) { return x == 0; })) {
                // [e_alpha, f_alpha] = h_alpha expanded in simple coroots:
                // coefficient k_l * d_l / d_alpha with d_alpha = (alpha,alpha)/2
                const long long dal = exact_div(rd.length_sq(mu), 2, "root length");
                for (int l = 0; l < rd.rank; ++l) {
                    const long long c =
                        exact_div(static_cast<long long>(mu[static_cast<std::size_t>(l)]) *
                                      rd.sym_d[static_cast<std::size_t>(l)],
                                  dal, "coroot coordinates");
                    if (c)
                        row.emplace_back(static_cast<std::uint32_t>(cb.h_index(static_cast<std::size_t>(l))), c);
                }
            } else if (rd.is_root(sig)) {
                row.emplace_back(static_cast<std::uint32_t>(basis_of_root(sig)),
                                 n_general(rd, npos, mu, nu));
            }
            set_pair(i, j, std::move(row));
        }
    }
    return cb;
}

namespace {

std::vector<long long> int_bracket_elem(const ChevalleyBasis& cb, std::size_t i,
                                        const std::vector<long long>& y) {
    std::vector<long long> out(cb.dim, 0);
    for (std::size_t j = 0; j < cb.dim; ++j) {
        if (!y[j]) continue;
        for (const auto& [k, c] : cb.entry(i, j)) out[k] += c * y[j];
    }
    return out;
}

bool jacobi_triple_ok_int(const ChevalleyBasis& cb, std::size_t i, std::size_t j, std::size_t k) {
    std::vector<long long> jk(cb.dim, 0), ij(cb.dim, 0), ki(cb.dim, 0);
    for (const auto& [t, c] : cb.entry(j, k)) jk[t] += c;
    for (const auto& [t, c] : cb.entry(i, j)) ij[t] += c;
    for (const auto& [t, c] : cb.entry(k, i)) ki[t] += c;
    const auto a = int_bracket_elem(cb, i, jk);
    const auto b = int_bracket_elem(cb, k, ij);
    const auto c = int_bracket_elem(cb, j, ki);
    for (std::size_t t = 0; t < cb.dim; ++t)
        if (a[t] + b[t] + c[t] != 0) return false;
    return true;
}

template <bool Parallel>
std::optional<std::array<std::size_t, 3>> jacobi_violation_int_impl(const ChevalleyBasis& cb) {
    const std::size_t n = cb.dim;
    std::array<std::size_t, 3> best{n, n, n};
    bool found = false;
    if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::array<std::size_t, 3> local{n, n, n};
            bool local_found = false;
#pragma omp for schedule(dynamic, 1) nowait
            for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
                const auto i = static_cast<std::size_t>(ii);
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::size_t k = j + 1; k < n; ++k)
                        if (!jacobi_triple_ok_int(cb, i, j, k)) {
                            const std::array<std::size_t, 3> t{i, j, k};
                            if (!local_found || t < local) local = t;
                            local_found = true;
                        }
            }
#pragma omp critical
            if (local_found && (!found || local < best)) {
                best = local;
                found = true;
            }
        }
#endif
    } else {
        for (std::size_t i = 0; i < n && !found; ++i)
            for (std::size_t j = i + 1; j < n && !found; ++j)
                for (std::size_t k = j + 1; k < n && !found; ++k)
                    if (!jacobi_triple_ok_int(cb, i, j, k)) {
                        best = {i, j, k};
                        found = true;
                    }
    }
    if (!found) return std::nullopt;
    return best;
}

} // namespace

std::optional<std::array<std::size_t, 3>> jacobi_violation_int_serial(const ChevalleyBasis& cb) {
    return jacobi_violation_int_impl<false>(cb);
}

std::optional<std::array<std::size_t, 3>> jacobi_violation_int(const ChevalleyBasis& cb) {
#ifdef _OPENMP
    if (kernels::exec_mode() != kernels::ExecMode::ForceSerial && cb.dim >= 24)
        return jacobi_violation_int_impl<true>(cb);
#endif
    return jacobi_violation_int_impl<false>(cb);
}

LieAlgebra reduce_mod_p(const ChevalleyBasis& cb, PrimeField f) {
    std::vector<SparseRow> table(cb.dim * cb.dim);
    for (std::size_t i = 0; i < cb.dim * cb.dim; ++i) {
        for (const auto& [k, c] : cb.int_table[i]) {
            const Scalar r = f.reduce(c);
            if (r) table[i].emplace_back(k, r);
        }
    }
    LieAlgebra alg(f, cb.dim, cb.labels, std::move(table));
    if (!alg.jacobi_ok())
        throw std::runtime_error("reduce_mod_p: Jacobi identity failed mod " +
                                 std::to_string(f.modulus()));
    return alg;
}

Vec element_from_label_sum(const ChevalleyBasis& cb, PrimeField f,
                           const std::vector<std::pair<long long, std::string>>& terms) {
    Vec v(cb.dim, 0);
    for (const auto& [coeff, label] : terms) {
        const auto idx = cb.index_of_label(label);
        if (!idx) throw std::invalid_argument("element_from_label_sum: unknown label '" + label + "'");
        v[*idx] = f.add(v[*idx], f.reduce(coeff));
    }
    return v;
}

void dump_structure_constants(const ChevalleyBasis& cb, PrimeField f, std::ostream& os) {
    os << "# type " << cb.rd.type_label << " p " << f.modulus() << " convention "
       << kConventionVersion << " basis " << cb.dim << "\n";
    for (std::size_t i = 0; i < cb.dim; ++i) os << i << " " << cb.labels[i] << "\n";
    os << "# constants: i j k c with [b_i, b_j] = sum_k c * b_k, i < j\n";
    for (std::size_t i = 0; i < cb.dim; ++i)
        for (std::size_t j = i + 1; j < cb.dim; ++j)
            for (const auto& [k, c] : cb.entry(i, j)) {
                const Scalar r = f.reduce(c);
                if (r) os << i << " " << j << " " << k << " " << r << "\n";
            }
}

} // namespace modlie::rootdata
