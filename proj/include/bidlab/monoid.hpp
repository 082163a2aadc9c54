#pragma once

// Exponent monoids of the graded rings the workbench studies.
//
//   NumericalSemigroup   cofinite submonoid of N, via its Apery set
//   RootFamily           generated by {1} and g/b^n (n >= 1); Hochster's ring is b=3, g=2
//   FinGenCone           finitely generated submonoid of Q^d_{>=0}
//   EvenDegree           points of N^d with even coordinate sum

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "bidlab/errors.hpp"
#include "bidlab/exponent.hpp"
#include "bidlab/rational.hpp"

namespace bidlab {

class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<std::int64_t> generators) {
        if (generators.empty()) throw ValidationError("numerical semigroup needs at least one generator");
        std::int64_t g = 0;
        for (auto v : generators) {
            if (v <= 0) throw ValidationError("numerical semigroup generators must be positive");
            g = std::gcd(g, v);
        }
        if (g != 1) throw ValidationError("numerical semigroup generators must have gcd 1");
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        gens_ = generators;
        m_ = gens_.front();
        // Apery set w.r.t. m: Dijkstra over residues mod m.
        apery_.assign(static_cast<std::size_t>(m_), INT64_MAX);
        apery_[0] = 0;
        std::set<std::pair<std::int64_t, std::int64_t>> queue{{0, 0}};
        while (!queue.empty()) {
            auto [d, r] = *queue.begin();
            queue.erase(queue.begin());
            if (d != apery_[r]) continue;
            for (auto gen : gens_) {
                std::int64_t nd = d + gen, nr = nd % m_;
                if (nd < apery_[nr]) {
                    apery_[nr] = nd;
                    queue.insert({nd, nr});
                }
            }
        }
        for (auto gen : gens_)
            if (!generated_without(gen)) minimal_.push_back(gen);
    }

    const std::vector<std::int64_t>& generators() const { return gens_; }
    /// Minimal generating set (embedding generators).
    const std::vector<std::int64_t>& minimal_generators() const { return minimal_; }
    std::int64_t multiplicity() const { return m_; }
    const std::vector<std::int64_t>& apery() const { return apery_; }
    std::int64_t max_apery() const { return *std::max_element(apery_.begin(), apery_.end()); }

    bool member(std::int64_t n) const {
        if (n < 0) return false;
        return n >= apery_[static_cast<std::size_t>(n % m_)];
    }

    /// Smallest c with [c, inf) inside the semigroup.
    std::int64_t conductor() const { return max_apery() - m_ + 1; }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.gens_ == b.gens_; }

private:
    // True when gen lies in the semigroup spanned by the other generators.
    bool generated_without(std::int64_t gen) const {
        std::vector<bool> reach(static_cast<std::size_t>(gen) + 1, false);
        reach[0] = true;
        for (std::int64_t v = 1; v <= gen; ++v)
            for (auto h : gens_)
                if (h != gen && h <= v && reach[static_cast<std::size_t>(v - h)]) {
                    reach[static_cast<std::size_t>(v)] = true;
                    break;
                }
        return reach[static_cast<std::size_t>(gen)];
    }

    std::vector<std::int64_t> gens_, minimal_, apery_;
    std::int64_t m_ = 1;
};

class RootFamily {
public:
    RootFamily(std::int64_t base, std::int64_t seed, bool include_unit = true)
        : b_(base), g_(seed), unit_(include_unit) {
        if (b_ < 2) throw ValidationError("root family base must be at least 2");
        if (g_ < 1) throw ValidationError("root family seed must be positive");
        if (std::gcd(b_, g_) != 1) throw ValidationError("root family seed must be coprime to the base");
    }

    std::int64_t base() const { return b_; }
    std::int64_t seed() const { return g_; }
    bool include_unit() const { return unit_; }

    /// Exponent of b in den(x); throws when den(x) is not a power of b.
    unsigned level(const Rational& x) const {
        Integer d = den(x);
        unsigned n = 0;
        while (d > 1) {
            if (d % b_ != 0) throw DomainError("denominator of " + to_string(x) + " is not a power of " + std::to_string(b_));
            d /= b_;
            ++n;
        }
        return n;
    }

    /// Residue of x in Z[1/b] / gZ[1/b] = Z/g, as an integer in [0, g).
    std::int64_t residue(const Rational& x) const {
        unsigned n = level(x);
        if (g_ == 1) return 0;
        Integer r = mod(num(x), Integer(g_));
        // multiply by the inverse of b^n mod g
        Integer binv = 1;
        for (std::int64_t k = 1; k < g_; ++k)
            if ((k * b_) % g_ == 1) binv = k;
        for (unsigned i = 0; i < n; ++i) r = mod(r * binv, Integer(g_));
        return to_i64(r);
    }

    // A sum of generators k*1 + g*y (k in N, y in N[1/b]) has residue k mod g. Conversely, clearing
    // denominators to b^n, b copies of g/b^{m+1} collapse to one g/b^m, so only the coins b^n and g
    // matter at level n. Hence x is a member iff x >= residue(x) (with the unit) or iff x >= 0 and
    // residue(x) = 0 (without it).
    bool member(const Rational& x) const {
        std::int64_t r = residue(x);
        if (x < 0) return false;
        if (!unit_) return r == 0;
        return x >= r;
    }

    friend bool operator==(const RootFamily&, const RootFamily&) = default;

private:
    std::int64_t b_, g_;
    bool unit_;
};

class FinGenCone {
public:
    FinGenCone(std::size_t dim, std::vector<Exponent> generators) : d_(dim) {
        if (dim == 0) throw ValidationError("cone dimension must be positive");
        for (auto& g : generators) {
            if (g.dim() != dim) throw ValidationError("cone generator has wrong dimension");
            for (const auto& v : g.c)
                if (v < 0) throw ValidationError("cone generators must be nonnegative");
            if (!g.is_zero()) gens_.push_back(g);
        }
        canonical_sort(gens_);
        if (gens_.empty()) throw ValidationError("cone needs a nonzero generator");
        for (const auto& g : gens_) den_ = lcm(den_, g.common_denominator());
    }

    std::size_t dim() const { return d_; }
    const std::vector<Exponent>& generators() const { return gens_; }

    bool member(const Exponent& x) const {
        for (const auto& v : x.c)
            if (v < 0) return false;
        if (x.is_zero()) return true;
        Integer scale = lcm(den_, x.common_denominator());
        std::vector<std::vector<Integer>> coins;
        for (const auto& g : gens_) {
            std::vector<Integer> c;
            for (const auto& v : g.c) c.push_back(num(v * Rational(scale)));
            coins.push_back(std::move(c));
        }
        std::vector<Integer> target;
        for (const auto& v : x.c) target.push_back(num(v * Rational(scale)));
        std::set<std::pair<std::size_t, std::vector<Integer>>> dead;
        return solve(coins, 0, target, dead);
    }

    friend bool operator==(const FinGenCone& a, const FinGenCone& b) { return a.d_ == b.d_ && a.gens_ == b.gens_; }

private:
    // Bounded multiplicity search: coin i is used 0..floor(min target_j / coin_ij) times.
    static bool solve(const std::vector<std::vector<Integer>>& coins, std::size_t i, std::vector<Integer> target,
                      std::set<std::pair<std::size_t, std::vector<Integer>>>& dead) {
        if (std::all_of(target.begin(), target.end(), [](const Integer& v) { return v == 0; })) return true;
        if (i == coins.size()) return false;
        if (dead.count({i, target})) return false;
        const auto& coin = coins[i];
        Integer cap = -1;
        for (std::size_t j = 0; j < coin.size(); ++j)
            if (coin[j] > 0) {
                Integer q = target[j] / coin[j];
                if (cap < 0 || q < cap) cap = q;
            }
        auto rest = target;
        for (Integer k = 0; k <= cap; ++k) {
            if (solve(coins, i + 1, rest, dead)) return true;
            for (std::size_t j = 0; j < coin.size(); ++j) rest[j] -= coin[j];
        }
        dead.insert({i, std::move(target)});
        return false;
    }

    std::size_t d_;
    std::vector<Exponent> gens_;
    Integer den_ = 1;
};

class EvenDegree {
public:
    explicit EvenDegree(std::size_t dim) : d_(dim) {
        if (dim == 0) throw ValidationError("even-degree monoid needs at least one variable");
    }
    std::size_t dim() const { return d_; }

    bool member(const Exponent& x) const {
        Integer total = 0;
        for (const auto& v : x.c) {
            if (v < 0 || !is_integer(v)) return false;
            total += num(v);
        }
        return total % 2 == 0;
    }

    friend bool operator==(const EvenDegree&, const EvenDegree&) = default;

private:
    std::size_t d_;
};

/// Membership and divisibility oracle for one of the supported exponent monoids.
class ExponentMonoid {
public:
    using Variant = std::variant<NumericalSemigroup, RootFamily, FinGenCone, EvenDegree>;

    template <class T>
        requires std::is_constructible_v<Variant, T>
    ExponentMonoid(T m) : v_(std::move(m)) {}  // NOLINT: implicit by design

    static ExponentMonoid naturals() { return NumericalSemigroup({1}); }

    const Variant& variant() const { return v_; }
    template <class T>
    const T* as() const {
        return std::get_if<T>(&v_);
    }

    std::size_t dim() const {
        return std::visit(
            [](const auto& m) -> std::size_t {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, FinGenCone> || std::is_same_v<T, EvenDegree>)
                    return m.dim();
                else
                    return 1;
            },
            v_);
    }

    /// Integer lattice (NS, EvenDegree) or one refined by a denominator cap (RootFamily, FinGenCone).
    bool uses_denominators() const { return as<RootFamily>() || as<FinGenCone>(); }

    bool member(const Exponent& x) const {
        check(x);
        return std::visit(
            [&](const auto& m) -> bool {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, NumericalSemigroup>) {
                    if (!is_integer(x[0])) return false;
                    return m.member(to_i64(num(x[0])));
                } else if constexpr (std::is_same_v<T, RootFamily>) {
                    return m.member(x[0]);
                } else {
                    return m.member(x);
                }
            },
            v_);
    }

    bool member(const Rational& x) const { return member(Exponent::scalar(x)); }

    /// x^a divides x^b in the monoid ring.
    bool divides(const Exponent& a, const Exponent& b) const { return member(b - a); }

    std::int64_t conductor() const {
        if (auto ns = as<NumericalSemigroup>()) return ns->conductor();
        throw UnsupportedError("conductor is only defined for numerical semigroups");
    }

    /// Checks a denominator cap against the monoid and returns the lattice step denominator.
    Integer lattice_denominator(const Integer& cap) const {
        if (cap < 1) throw DomainError("denominator cap must be positive");
        if (auto rf = as<RootFamily>()) {
            rf->level(Rational(1, cap));  // throws unless cap is a power of b
            return cap;
        }
        if (as<FinGenCone>()) return cap;
        return 1;
    }

    /// Lattice points x with lo <= x <= hi coordinatewise, canonically sorted.
    std::vector<Exponent> grid(const Exponent& lo, const Rational& hi, const Integer& cap) const {
        check(lo);
        const Integer step = lattice_denominator(cap);
        std::vector<Integer> first, last;
        for (const auto& v : lo.c) {
            first.push_back(ceil_int(v * Rational(step)));
            last.push_back(floor_int(hi * Rational(step)));
        }
        std::vector<Exponent> out;
        for (std::size_t i = 0; i < first.size(); ++i)
            if (first[i] > last[i]) return out;
        // emit by ascending scaled sum, descending lex within a sum: canonical order without a sort
        const std::size_t d = first.size();
        std::vector<std::int64_t> f(d), l(d), cur(d), tail_lo(d + 1, 0), tail_hi(d + 1, 0);
        for (std::size_t i = 0; i < d; ++i) {
            f[i] = to_i64(first[i]);
            l[i] = to_i64(last[i]);
        }
        for (std::size_t i = d; i-- > 0;) {
            tail_lo[i] = tail_lo[i + 1] + f[i];
            tail_hi[i] = tail_hi[i + 1] + l[i];
        }
        auto coord = [&](std::int64_t v) { return step == 1 ? Rational(v) : Rational(Integer(v), step); };
        std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
            if (i == d) {
                Exponent e(d);
                for (std::size_t k = 0; k < d; ++k) e[k] = coord(cur[k]);
                out.push_back(std::move(e));
                return;
            }
            std::int64_t hi_v = std::min(l[i], left - tail_lo[i + 1]);
            std::int64_t lo_v = std::max(f[i], left - tail_hi[i + 1]);
            for (std::int64_t v = hi_v; v >= lo_v; --v) {
                cur[i] = v;
                rec(i + 1, left - v);
            }
        };
        for (std::int64_t s = tail_lo[0]; s <= tail_hi[0]; ++s) rec(0, s);
        return out;
    }

    /// Members with every coordinate in [0, bound] and denominator dividing the cap.
    std::vector<Exponent> enumerate_up_to(const Rational& bound, const Integer& cap) const {
        if (bound < 0) throw DomainError("enumeration bound must be nonnegative");
        std::vector<Exponent> out;
        for (auto& x : grid(Exponent(dim()), bound, cap))
            if (member(x)) out.push_back(std::move(x));
        return out;
    }

    /// Extra window height beyond the largest anchor that makes threshold windows exact; empty when
    /// no such bound is known.
    std::optional<Rational> exact_margin() const {
        if (auto ns = as<NumericalSemigroup>()) return Rational(ns->max_apery());
        if (auto rf = as<RootFamily>()) return Rational(rf->include_unit() ? rf->seed() - 1 : 0);
        if (as<EvenDegree>()) return Rational(1);
        return std::nullopt;
    }

    std::string describe() const {
        return std::visit(
            [](const auto& m) -> std::string {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, NumericalSemigroup>) {
                    std::string s = "numerical semigroup <";
                    for (std::size_t i = 0; i < m.generators().size(); ++i)
                        s += (i ? "," : "") + std::to_string(m.generators()[i]);
                    return s + ">";
                } else if constexpr (std::is_same_v<T, RootFamily>) {
                    return "root family base " + std::to_string(m.base()) + " seed " + std::to_string(m.seed()) +
                           (m.include_unit() ? "" : " without unit");
                } else if constexpr (std::is_same_v<T, FinGenCone>) {
                    return "cone in dimension " + std::to_string(m.dim()) + " generated by " + join(m.generators());
                } else {
                    return "even-degree monoid in " + std::to_string(m.dim()) + " variables";
                }
            },
            v_);
    }

    friend bool operator==(const ExponentMonoid& a, const ExponentMonoid& b) { return a.v_ == b.v_; }

private:
    void check(const Exponent& x) const {
        if (x.dim() != dim())
            throw DomainError("exponent " + x.str() + " has dimension " + std::to_string(x.dim()) +
                              ", monoid expects " + std::to_string(dim()));
    }

    Variant v_;
};

}  // namespace bidlab
