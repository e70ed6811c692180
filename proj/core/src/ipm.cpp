#include "piles/ipm.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "piles/sample.hpp"
#include "piles/validity.hpp"

namespace piles {

namespace {

void require_basis(const IpmBasis& basis, long long k) {
    if (k < 1) throw Error("plateau parameter k must be >= 1");
    if (basis.w < 1 || basis.l < 1 || basis.l > k)
        throw Error("basis (" + std::to_string(basis.w) + "," + std::to_string(basis.l) +
                    ") is not valid for k = " + std::to_string(k));
}

// Indices targeted by the peeling step at alignment lambda: the residue class
// lambda mod k. For lambda = k this includes index 0.
long long target_class(long long lambda, long long k) { return lambda % k; }

long long targets_in_range(long long lambda, long long k, long long len) {
    const long long delta = target_class(lambda, k);
    return len > delta ? (len - 1 - delta) / k + 1 : 0;
}

long long succ_lambda(long long lambda, long long k) { return lambda == k ? 1 : lambda + 1; }

// First index of the distinguished residue class of a basis with the given l:
// the class of l mod k, which starts at 0 when l = k.
long long class_start(long long lambda, long long k) { return lambda % k; }

}  // namespace

std::string IpmBasis::to_string() const {
    return "(" + std::to_string(w) + "," + std::to_string(l) + ")";
}

Configuration ipm_staircase(const IpmBasis& basis, long long k) {
    require_basis(basis, k);
    std::vector<long long> parts;
    parts.reserve(static_cast<std::size_t>(basis.l + k * (basis.w - 1)));
    for (long long i = 0; i < basis.l; ++i) parts.push_back(basis.w);
    for (long long v = basis.w - 1; v >= 1; --v)
        for (long long i = 0; i < k; ++i) parts.push_back(v);
    return Configuration::trusted(std::move(parts));
}

long long ipm_socle_weight(const IpmBasis& basis, long long k) {
    return basis.l * basis.w + k * (basis.w - 1) * basis.w / 2;
}

long long ipm_grid_length(const IpmBasis& basis, long long k) {
    return basis.l + k * (basis.w - 1) + 1;
}

IpmBasis ipm_successor(const IpmBasis& basis, long long k) {
    return basis.l == k ? IpmBasis{basis.w + 1, 1} : IpmBasis{basis.w, basis.l + 1};
}

IpmBasis ipm_predecessor(const IpmBasis& basis, long long k) {
    if (basis.l > 1) return {basis.w, basis.l - 1};
    if (basis.w > 1) return {basis.w - 1, k};
    throw TrajectoryMismatch("no basis precedes (1,1)");
}

IpmBasis ipm_staircase_width(const Configuration& c, long long k) {
    if (k < 1) throw Error("plateau parameter k must be >= 1");
    if (c.empty())
        throw InvalidConfiguration("the empty configuration has no staircase basis");
    const long long n = c.weight();
    IpmBasis basis{1, 1};  // s(1,1) = (1) fits under any non-empty configuration
    for (;;) {
        IpmBasis next = ipm_successor(basis, k);
        if (ipm_socle_weight(next, k) > n) break;
        if (!sequence_leq(ipm_staircase(next, k), c)) break;
        basis = next;
    }
    return basis;
}

long long IpmReducedForm::weight() const {
    long long total = 0;
    for (long long e : entries) total += e;
    return total;
}

std::string IpmReducedForm::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries[i]);
    }
    return out;
}

IpmClassification classify_ipm_tuple(const std::vector<long long>& entries,
                                     const IpmBasis& basis, long long k) {
    require_basis(basis, k);
    const long long len = static_cast<long long>(entries.size());
    const long long l = basis.l;
    IpmClassification result;
    result.n = ipm_socle_weight(basis, k);
    for (long long e : entries) result.n += e;

    auto at = [&](long long i) { return i < len ? entries[static_cast<std::size_t>(i)] : 0; };

    for (long long i = 0; i < len; ++i) {
        if (at(i) < 0) {
            result.reason = "negative entry";
            return result;
        }
        // Block monotonicity: the represented prefix r + s(w,l) must be
        // non-increasing; the staircase drops by one entering each index
        // congruent to l (mod k).
        if (i + 1 < len) {
            const long long rise = ((i + 1) % k == l % k) ? 1 : 0;
            if (at(i) < at(i + 1) - rise) {
                result.reason = "entries rise too steeply at index " + std::to_string(i + 1);
                return result;
            }
        }
        // Long-range slope: entries one residue step to the right, at least a
        // full block away, may exceed this one only across the l-1 residue.
        const long long relax = (i % k == (l - 1 + k) % k) ? 1 : 0;
        for (long long j = i + k + 1; j < len; j += k) {
            if (at(i) < at(j) - relax) {
                result.reason = "entry " + std::to_string(j) + " exceeds entry " +
                                std::to_string(i) + " beyond the allowed slope";
                return result;
            }
        }
    }
    result.cls = IpmClass::augmented;

    for (long long z = class_start(l, k); z < len; z += k) {
        if (at(z) == 0) {
            result.cls = IpmClass::extended;
            break;
        }
    }
    if (result.cls == IpmClass::extended && len == ipm_grid_length(basis, k))
        result.cls = IpmClass::reduced;
    return result;
}

IpmReducedForm ipm_reduce(const Configuration& c, long long k) {
    if (auto report = is_valid_ipm(c, k); !report)
        throw InvalidConfiguration("not a reachable configuration: forbidden pattern at column " +
                                   std::to_string(report.index));
    IpmReducedForm r;
    r.k = k;
    r.basis = ipm_staircase_width(c, k);
    const Configuration socle = ipm_staircase(r.basis, k);
    const long long len = ipm_grid_length(r.basis, k);
    assert(c.at(static_cast<std::size_t>(len)) == 0);
    r.entries.resize(static_cast<std::size_t>(len));
    for (long long i = 0; i < len; ++i)
        r.entries[static_cast<std::size_t>(i)] =
            c.at(static_cast<std::size_t>(i)) - socle.at(static_cast<std::size_t>(i));
    return r;
}

Configuration ipm_expand(const IpmReducedForm& r) {
    require_basis(r.basis, r.k);
    const Configuration socle = ipm_staircase(r.basis, r.k);
    std::vector<long long> parts(r.entries.size());
    for (std::size_t i = 0; i < r.entries.size(); ++i)
        parts[i] = r.entries[i] + socle.at(i);
    return Configuration(std::move(parts));
}

bool pl_defined(const IpmReducedForm& r) {
    const long long delta = target_class(r.basis.l, r.k);
    for (long long i = delta; i < static_cast<long long>(r.entries.size()); i += r.k)
        if (r.entries[static_cast<std::size_t>(i)] == 0) return false;
    return true;
}

IpmReducedForm pl(const IpmReducedForm& r) {
    require_basis(r.basis, r.k);
    if (!pl_defined(r))
        throw PeelUndefined("a targeted entry of class " +
                            std::to_string(target_class(r.basis.l, r.k)) + " (mod " +
                            std::to_string(r.k) + ") is zero");
    IpmReducedForm out = r;
    const long long delta = target_class(r.basis.l, r.k);
    for (long long i = delta; i < static_cast<long long>(out.entries.size()); i += r.k)
        out.entries[static_cast<std::size_t>(i)] -= 1;
    out.basis = ipm_successor(r.basis, r.k);
    return out;
}

PeelResult peel_to_terminal(const IpmReducedForm& r) {
    require_basis(r.basis, r.k);
    PeelResult result{r, 0};
    if (r.entries.empty()) return result;
    while (pl_defined(result.terminal)) {
        result.terminal = pl(result.terminal);
        result.count += 1;
    }
    return result;
}

IpmReducedForm aug(const IpmReducedForm& t, long long count, const IpmBasis& target_basis) {
    require_basis(target_basis, t.k);
    const long long k = t.k;
    std::vector<long long> incr(static_cast<std::size_t>(k), 0);
    IpmBasis basis = target_basis;
    for (long long step = 0; step < count; ++step) {
        incr[static_cast<std::size_t>(target_class(basis.l, k))] += 1;
        basis = ipm_successor(basis, k);
    }
    if (basis != t.basis)
        throw TrajectoryMismatch("basis " + t.basis.to_string() + " is not reached from " +
                                 target_basis.to_string() + " after " + std::to_string(count) +
                                 " peeling steps");
    IpmReducedForm out = t;
    out.basis = target_basis;
    for (std::size_t i = 0; i < out.entries.size(); ++i)
        out.entries[i] += incr[i % static_cast<std::size_t>(k)];
    return out;
}

IpmDecomp ipm_decompose(const IpmReducedForm& r) {
    require_basis(r.basis, r.k);
    const auto cls = classify_ipm_tuple(r.entries, r.basis, r.k);
    if (cls.cls != IpmClass::extended && cls.cls != IpmClass::reduced)
        throw NotExtended("tuple has no zero at an index of the form l + k*p");
    const long long len = static_cast<long long>(r.entries.size());
    long long z = class_start(r.basis.l, r.k);
    while (r.entries[static_cast<std::size_t>(z)] != 0) z += r.k;

    IpmReducedForm prefix;
    prefix.k = r.k;
    prefix.basis = r.basis;
    prefix.entries.assign(r.entries.begin(), r.entries.begin() + z);
    PeelResult peeled = peel_to_terminal(prefix);

    IpmDecomp d;
    d.t_prime = std::move(peeled.terminal);
    d.c = peeled.count;
    d.p = (z - r.basis.l) / r.k;
    d.u.assign(r.entries.begin() + z + 1, r.entries.end());
    (void)len;
    return d;
}

IpmReducedForm ipm_recompose(const IpmDecomp& d) {
    const long long k = d.t_prime.k;
    IpmBasis target = d.t_prime.basis;
    for (long long step = 0; step < d.c; ++step) target = ipm_predecessor(target, k);

    IpmReducedForm prefix = aug(d.t_prime, d.c, target);
    const long long z = static_cast<long long>(prefix.entries.size());
    if (z != target.l + k * d.p)
        throw InconsistentStep("prefix length does not match the declared zero position");
    for (long long i = class_start(target.l, k); i < z; i += k)
        if (prefix.entries[static_cast<std::size_t>(i)] == 0)
            throw InconsistentStep("prefix contains a distinguished zero before the split");
    for (std::size_t q = 0; q < d.u.size(); ++q) {
        const bool free_slot = (static_cast<long long>(q) % k) == k - 1;
        const long long cap = free_slot ? 1 : 0;
        if (d.u[q] < 0 || d.u[q] > cap)
            throw InconsistentStep("tail entry " + std::to_string(q) + " out of range");
    }

    IpmReducedForm r;
    r.k = k;
    r.basis = target;
    r.entries = prefix.entries;
    r.entries.push_back(0);
    r.entries.insert(r.entries.end(), d.u.begin(), d.u.end());
    return r;
}

// ---------------------------------------------------------------------------
// Counting via the decomposition, memoized on (length, alignment, weight).

namespace {
std::uint64_t pack_key(long long len, long long lambda, long long q) {
    return (static_cast<std::uint64_t>(len) << 44) |
           (static_cast<std::uint64_t>(lambda) << 38) | static_cast<std::uint64_t>(q);
}
}  // namespace

IpmCountTable::IpmCountTable(long long k, long long n_max)
    : k_(k),
      n_max_(n_max),
      binom_(k + static_cast<long long>(std::sqrt(2.0 * static_cast<double>(std::max<long long>(n_max, 1)) *
                                                  static_cast<double>(k))) +
             4),
      zero_(0) {
    if (k < 1) throw Error("plateau parameter k must be >= 1");
    if (n_max < 0) throw Error("negative capacity");
}

const BigInt& IpmCountTable::extended_count(long long len, long long lambda, long long q) {
    return memo(extended_, true, len, lambda, q);
}

const BigInt& IpmCountTable::prefix_count(long long len, long long lambda, long long q) {
    return memo(prefix_, false, len, lambda, q);
}

BigInt IpmCountTable::augmented_count(long long len, long long lambda, long long q) {
    return prefix_count(len, lambda, q) + extended_count(len, lambda, q);
}

const BigInt& IpmCountTable::memo(std::unordered_map<std::uint64_t, BigInt>& table,
                                  bool extended, long long len, long long lambda,
                                  long long q) {
    if (q < 0) return zero_;
    if (lambda < 1 || lambda > k_) throw Error("alignment out of range");
    if (extended && len <= class_start(lambda, k_)) return zero_;  // no distinguished index
    if (!extended && len == 0) {
        static const BigInt one_static(1);
        return q == 0 ? one_static : zero_;
    }
    const std::uint64_t key = pack_key(len, lambda, q);
    if (auto it = table.find(key); it != table.end()) return it->second;

    BigInt total = 0;
    if (extended) {
        // Split at the first distinguished zero z; the tail has free 0/1 slots
        // every k positions, the part before z has no distinguished zero.
        for (long long z = class_start(lambda, k_); z < len; z += k_) {
            const long long frees = (len - z - 1) / k_;
            for (long long j = 0; j <= std::min(frees, q); ++j)
                total += binom_.at(frees, j) * prefix_count(z, lambda, q - j);
        }
    } else {
        // Classify by the peeling terminal: after c steps the form is either
        // extended at the shifted alignment, or blocked at entry 0 when the
        // alignment sits at l = k (the forced shape).
        long long added = 0;
        long long lam = lambda;
        for (long long c = 0; added <= q; ++c) {
            if (c >= 1) total += extended_count(len, lam, q - added);
            added += targets_in_range(lam, k_, len);
            lam = succ_lambda(lam, k_);
        }
    }
    auto [it, inserted] = table.try_emplace(key, std::move(total));
    (void)inserted;
    return it->second;
}

BigInt IpmCountTable::count(long long n) {
    if (n < 0) throw Error("negative grain count");
    if (n > n_max_) throw CapacityExceeded("n beyond table capacity");
    if (n == 0) return 1;
    BigInt total = 0;
    for (long long w = 1; ipm_socle_weight({w, 1}, k_) <= n; ++w) {
        for (long long l = 1; l <= k_; ++l) {
            const IpmBasis basis{w, l};
            const long long socle = ipm_socle_weight(basis, k_);
            if (socle > n) break;
            total += extended_count(ipm_grid_length(basis, k_), l, n - socle);
        }
    }
    return total;
}

BigInt ipm_count(long long n, long long k) {
    IpmCountTable table(k, n);
    return table.count(n);
}

// ---------------------------------------------------------------------------
// Exhaustive generation, mirroring the counting recursion.

namespace {

class IpmGenerator {
   public:
    IpmGenerator(long long k, const std::function<void(const Configuration&)>& visit)
        : k_(k), visit_(visit) {}

    void run(long long n) {
        if (n == 0) {
            visit_(Configuration());
            return;
        }
        for (long long w = 1; ipm_socle_weight({w, 1}, k_) <= n; ++w) {
            for (long long l = 1; l <= k_; ++l) {
                const IpmBasis basis{w, l};
                const long long socle = ipm_socle_weight(basis, k_);
                if (socle > n) break;
                const long long len = ipm_grid_length(basis, k_);
                buf_.assign(static_cast<std::size_t>(len), 0);
                socle_ = ipm_staircase(basis, k_);
                gen_extended(len, l, n - socle, [this, len] { emit(len); });
            }
        }
    }

    std::uint64_t nodes = 0;

   private:
    void emit(long long len) {
        std::vector<long long> parts(static_cast<std::size_t>(len));
        for (long long i = 0; i < len; ++i)
            parts[static_cast<std::size_t>(i)] =
                buf_[static_cast<std::size_t>(i)] + socle_.at(static_cast<std::size_t>(i));
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        visit_(Configuration::trusted(std::move(parts)));
    }

    void gen_extended(long long len, long long lambda, long long q,
                      const std::function<void()>& sink) {
        ++nodes;
        if (q < 0 || len <= class_start(lambda, k_)) return;
        for (long long z = class_start(lambda, k_); z < len; z += k_) {
            for (long long a = z; a < len; ++a) buf_[static_cast<std::size_t>(a)] = 0;
            std::vector<long long> frees;
            for (long long a = z + k_; a < len; a += k_) frees.push_back(a);
            gen_tail(frees, 0, q, lambda, z, sink);
        }
    }

    // Chooses which free tail slots hold a grain, then fills the prefix.
    void gen_tail(const std::vector<long long>& frees, std::size_t slot, long long budget,
                  long long lambda, long long z, const std::function<void()>& sink) {
        if (slot == frees.size()) {
            gen_prefix(z, lambda, budget, sink);
            return;
        }
        gen_tail(frees, slot + 1, budget, lambda, z, sink);
        if (budget >= 1) {
            buf_[static_cast<std::size_t>(frees[slot])] = 1;
            gen_tail(frees, slot + 1, budget - 1, lambda, z, sink);
            buf_[static_cast<std::size_t>(frees[slot])] = 0;
        }
    }

    void gen_prefix(long long len, long long lambda, long long q,
                    const std::function<void()>& sink) {
        ++nodes;
        if (q < 0) return;
        if (len == 0) {
            if (q == 0) sink();
            return;
        }
        std::vector<long long> incr(static_cast<std::size_t>(k_), 0);
        long long added = 0;
        long long lam = lambda;
        for (long long c = 0; added <= q; ++c) {
            if (c >= 1) {
                gen_extended(len, lam, q - added, [this, len, &incr, &sink] {
                    for (long long a = 0; a < len; ++a)
                        buf_[static_cast<std::size_t>(a)] +=
                            incr[static_cast<std::size_t>(a % k_)];
                    sink();
                    for (long long a = 0; a < len; ++a)
                        buf_[static_cast<std::size_t>(a)] -=
                            incr[static_cast<std::size_t>(a % k_)];
                });
            }
            incr[static_cast<std::size_t>(target_class(lam, k_))] += 1;
            added += targets_in_range(lam, k_, len);
            lam = succ_lambda(lam, k_);
        }
    }

    long long k_;
    const std::function<void(const Configuration&)>& visit_;
    std::vector<long long> buf_;
    Configuration socle_;
};

}  // namespace

void ipm_generate(long long n, long long k,
                  const std::function<void(const Configuration&)>& visit,
                  std::uint64_t* nodes) {
    if (k < 1) throw Error("plateau parameter k must be >= 1");
    if (n < 0) throw Error("negative grain count");
    IpmGenerator gen(k, visit);
    gen.run(n);
    if (nodes) *nodes += gen.nodes;
}

// ---------------------------------------------------------------------------
// Unranking of augmented forms (mirrors the counting recursion cell by cell).

namespace {

std::vector<long long> unrank_extended_impl(IpmCountTable& table, long long len,
                                            long long lambda, long long q, BigInt idx);

std::vector<long long> unrank_prefix_impl(IpmCountTable& table, long long len,
                                          long long lambda, long long q, BigInt idx) {
    const long long k = table.k();
    if (len == 0) {
        if (q == 0 && idx == 0) return {};
        throw Error("unrank: index out of range");
    }
    std::vector<long long> incr(static_cast<std::size_t>(k), 0);
    long long added = 0;
    long long lam = lambda;
    for (long long c = 0; added <= q; ++c) {
        const long long rem = q - added;
        if (c >= 1) {
            const BigInt& ne = table.extended_count(len, lam, rem);
            if (idx < ne) {
                std::vector<long long> base = unrank_extended_impl(table, len, lam, rem, std::move(idx));
                for (long long a = 0; a < len; ++a)
                    base[static_cast<std::size_t>(a)] += incr[static_cast<std::size_t>(a % k)];
                return base;
            }
            idx -= ne;
        }
        incr[static_cast<std::size_t>(target_class(lam, k))] += 1;
        added += targets_in_range(lam, k, len);
        lam = succ_lambda(lam, k);
    }
    throw Error("unrank: index out of range");
}

std::vector<long long> unrank_extended_impl(IpmCountTable& table, long long len,
                                            long long lambda, long long q, BigInt idx) {
    const long long k = table.k();
    for (long long z = class_start(lambda, k); z < len; z += k) {
        const long long frees = (len - z - 1) / k;
        for (long long j = 0; j <= std::min(frees, q); ++j) {
            const BigInt& ways = table.binomials().at(frees, j);
            const BigInt& sub = table.prefix_count(z, lambda, q - j);
            if (sub == 0 || ways == 0) continue;
            BigInt cell = ways * sub;
            if (idx >= cell) {
                idx -= cell;
                continue;
            }
            BigInt u_rank = idx / sub;
            BigInt p_rank = idx % sub;
            std::vector<long long> out =
                unrank_prefix_impl(table, z, lambda, q - j, std::move(p_rank));
            out.resize(static_cast<std::size_t>(len), 0);
            for (long long slot : unrank_fixed_weight(table.binomials(), frees, j, std::move(u_rank)))
                out[static_cast<std::size_t>(z + k * (slot + 1))] = 1;
            return out;
        }
    }
    throw Error("unrank: index out of range");
}

}  // namespace

std::vector<long long> unrank_augmented(IpmCountTable& table, long long len,
                                        long long lambda, long long q, BigInt idx) {
    const BigInt& prefixes = table.prefix_count(len, lambda, q);
    if (idx < prefixes) return unrank_prefix_impl(table, len, lambda, q, std::move(idx));
    idx -= prefixes;
    return unrank_extended_impl(table, len, lambda, q, std::move(idx));
}

}  // namespace piles
