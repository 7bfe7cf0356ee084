#ifndef ORDSTAT_AUCTION_HPP
#define ORDSTAT_AUCTION_HPP

// Auctioneer objective, optimal bidder count, and reserve-price analytics
// for independent-private-value auctions: a standard auction with n bidders
// pays the auctioneer the expected second-highest valuation, so the
// objective is E[n-1:n] - c(n) for a convex recruiting cost c.

#include "ordstat/distribution.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ordstat {

// Convex, nonnegative cost of attracting n bidders.  Either a polynomial in
// n or a table of values for n = 2, 3, ...  Nonnegativity and discrete
// convexity are validated on the integer grid at construction.
class CostModel {
public:
    // Grammar: "poly:c0,c1,...,cd" or "table:v2,v3,..." (table indexed from
    // n = 2).  Polynomials are validated on [0, validation_n]; tables on
    // their own span.  Throws ParseError.
    static CostModel parse(std::string_view spec, int validation_n = 10000);
    static CostModel polynomial(std::vector<double> coefficients,
                                int validation_n = 10000);
    static CostModel table(std::vector<double> values_from_n2);

    double operator()(int n) const;

    // Largest n this model can price (INT_MAX for polynomials).
    int max_n() const { return max_n_; }

    std::string describe() const;

private:
    CostModel() = default;
    void validate_grid(int lo, int hi) const;

    bool is_table_ = false;
    std::vector<double> coeffs_;  // polynomial coefficients, degree order
    std::vector<double> table_;   // values for n = 2, 3, ...
    int max_n_ = 0;
};

// Auctioneer payoff: E[n-1:n] - c(n) for n >= 2, zero for n in {0, 1}.
double objective(const Distribution& dist, const CostModel& cost, int n);

struct AuctionResult {
    int n_star = 0;
    bool concavity_certified = false;  // hazard class allowed the early stop
    bool tie_broken = false;           // another n attains the max within tol
    int evaluated_max_n = 0;           // g was computed for n in [0, this]
    std::vector<double> g_values;      // g_values[n] valid up to evaluated_max_n
};

// Smallest maximizer of the objective over n in {0, ..., n_max}.  When the
// valuation distribution is MHR the revenue term is concave, so the scan may
// stop at the first strict decrease; otherwise it is exhaustive.  Both paths
// return the same maximizer.  Throws BoundaryMaximizerError when the
// objective is still rising at n_max.
AuctionResult optimize(const Distribution& dist, const CostModel& cost, int n_max,
                       bool force_exhaustive = false);

// Expected order statistics of the draws conditioned on all (max_of_n) or
// all but one (second_of_n) of them lying at or below the reserve r.
enum class ConditionalKind { MaxOfN, SecondOfN };
double conditional_lower_os(const Distribution& dist, double r,
                            ConditionalKind which, int n);

// Expected auction revenue with reserve r: the second-highest valuation when
// it clears r, r itself when only the highest does, zero otherwise.
// Requires support within [0, inf) and r in the support.
double reserve_revenue(const Distribution& dist, double r, int n);

// The integral of P(second-highest of n exceeds y) over y in [r, inf) -- the
// n-dependent part of the reserve revenue.
double reserve_tail_integral(const Distribution& dist, double r, int n);

// Second difference of reserve_tail_integral in n, as a single integral
// (requires n >= 3).  Nonpositive for MHR distributions whenever
// F(r) <= 1 - 2/n.
double reserve_second_difference(const Distribution& dist, double r, int n);

// Distribution-free closed form of the concavity certificate for the reserve
// objective, as a function of F(r).  Nonpositive whenever F(r) <= 1 - 2/n.
double reserve_j(double F_r, int n);

// F(r) <= 1 - 2/n.
bool reserve_condition(const Distribution& dist, double r, int n);

// As optimize(), with revenue replaced by reserve_revenue.  The early stop is
// only taken once the reserve condition holds from some n onward.
AuctionResult optimize_with_reserve(const Distribution& dist, const CostModel& cost,
                                    double r, int n_max,
                                    bool force_exhaustive = false);

}  // namespace ordstat

#endif
