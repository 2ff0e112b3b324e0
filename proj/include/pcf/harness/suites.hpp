#ifndef PCF_HARNESS_SUITES_HPP
#define PCF_HARNESS_SUITES_HPP

#include <string>
#include <vector>

#include "pcf/bounds.hpp"
#include "pcf/harness/report.hpp"
#include "pcf/spectral_parameter.hpp"

namespace pcf::harness {

/** \brief Grid shared by the lemma suites; t = r e^{-i theta}. */
struct LemmaGrid {
    std::vector<double> thetas;               ///< theta = arg(lambda)/2 in [0, pi/2]
    int r_count = 2001;
    double r_max = 10.0;
    std::vector<SpectralParameter> lambdas;   ///< for checks that depend on |lambda|
    double delta = 0.5235987755982988;
    double margin_tol = 1e-8;                 ///< a closed inequality passes when its worst margin >= -margin_tol
    unsigned long long seed = 1;
    int jobs = 1;

    std::vector<double> radii() const;
};

/** \brief Default grid: theta in {0, pi/24, ..., pi/2}, r in [0, 10] with step 0.005. */
LemmaGrid default_lemma_grid(double delta);

/**
 * \brief Tracks the worst (smallest) margin per clause.
 *
 * A margin is positive when the clause holds with room to spare.
 */
class MarginTracker {
public:
    void add(const std::string& clause, double margin, double theta, double r);
    /** Appends the other tracker's clauses; ties keep the earlier sample. */
    void merge(const MarginTracker& other);

    struct Entry {
        std::string clause;
        long long samples = 0;
        double worst = 0.0;
        double theta = 0.0;
        double r = 0.0;
    };
    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<Entry> entries_;
};

struct SuiteOutput {
    std::vector<CheckResult> checks;
    std::vector<CsvTable> tables;
};

/** \brief Converts tracked margins into checks named "<suite>.<clause>" and a CSV table "<suite>". */
SuiteOutput margins_to_output(const std::string& suite, const MarginTracker& m, double tol);

SuiteOutput suite_xi_bounds(const LemmaGrid& g);
SuiteOutput suite_xi_monotonicity(const LemmaGrid& g);
SuiteOutput suite_xi_w(const LemmaGrid& g);
SuiteOutput suite_der_xi(const LemmaGrid& g);
SuiteOutput suite_turning_point(const LemmaGrid& g);
SuiteOutput suite_gamma_geometry(const LemmaGrid& g);
SuiteOutput suite_upsilon_integrals(const LemmaGrid& g);
SuiteOutput suite_gamma_parametrization(const LemmaGrid& g);
SuiteOutput suite_round_trip(const LemmaGrid& g);
SuiteOutput suite_domain_containment(const LemmaGrid& g);

/**
 * \brief True when x >= 0 lies on the part of Gamma_lambda that the variant's
 * theorem domain is asserted to contain, given arg lambda in [0, pi].
 */
bool in_particular_range(SolutionVariant v, double arg_lambda, double x, double x_star, double delta);

/** \brief Every suite above, in a fixed order. */
SuiteOutput run_all_suites(const LemmaGrid& g);

} // namespace pcf::harness

#endif
