#ifndef PM_SERIES_HPP
#define PM_SERIES_HPP

#include "pm/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

namespace pm {

// Multivariate formal power series over exact rationals, truncated in z.
// A coefficient lives at (n, j, k): z-degree n, u-degree j, x-multidegree k.
// The coefficient of z^n is a polynomial in u of degree <= 2n, and the
// total x-degree is capped at x_degree_bound. Values are immutable from
// the outside once built; all queries are const.
class TruncatedSeries {
public:
    struct Key {
        int n = 0;
        int j = 0;
        std::vector<int> x;
        bool operator<(const Key& o) const {
            if (n != o.n) return n < o.n;
            if (j != o.j) return j < o.j;
            return x < o.x;
        }
        bool operator==(const Key& o) const { return n == o.n && j == o.j && x == o.x; }
    };

    TruncatedSeries(int z_order, int x_arity, int x_degree_bound)
        : z_order_(z_order), x_arity_(x_arity), x_degree_bound_(x_degree_bound) {}

    int z_order() const { return z_order_; }
    int x_arity() const { return x_arity_; }
    int x_degree_bound() const { return x_degree_bound_; }

    // Sets a coefficient; drops writes outside the declared truncation
    // (z-degree, u-degree, total x-degree) and erases explicit zeros.
    void set(int n, int j, const std::vector<int>& x, const Rational& v);
    void add_to(int n, int j, const std::vector<int>& x, const Rational& v);

    // Exact coefficient; absent entries are zero. Throws std::out_of_range
    // for queries beyond the truncation (those coefficients are unknown,
    // not zero).
    const Rational& coeff(int n, int j, const std::vector<int>& x) const;

    bool in_range(int n, int j, const std::vector<int>& x) const;

    const std::map<Key, Rational>& terms() const { return terms_; }

    TruncatedSeries add(const TruncatedSeries& other) const;
    TruncatedSeries sub(const TruncatedSeries& other) const;
    TruncatedSeries mul(const TruncatedSeries& other) const;
    TruncatedSeries negate() const;

    // (F(z,u,x) - F(z,1,x)) / (u - 1), exact for u-polynomial coefficients.
    TruncatedSeries divided_difference_u() const;

    // F(z,1,x): collapses the u-dimension.
    TruncatedSeries eval_u1() const;

    static TruncatedSeries one(int z_order, int x_arity, int x_degree_bound);

    // Line-oriented text format: a "# pm-series ..." header followed by one
    // line per nonzero coefficient, "n j k1,...,kr num/den" ("-" when r=0).
    void dump(std::ostream& os) const;
    static TruncatedSeries load(std::istream& is);

    bool operator==(const TruncatedSeries& o) const;

private:
    int z_order_;
    int x_arity_;
    int x_degree_bound_;
    std::map<Key, Rational> terms_;
    static const Rational zero_;
};

} // namespace pm

#endif
