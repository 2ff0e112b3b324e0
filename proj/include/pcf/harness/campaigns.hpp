#ifndef PCF_HARNESS_CAMPAIGNS_HPP
#define PCF_HARNESS_CAMPAIGNS_HPP

#include "pcf/harness/config.hpp"
#include "pcf/harness/report.hpp"

namespace pcf::harness {

/** \brief Every lemma suite; one margin CSV per lemma. */
Report cmd_verify_lemmas(const CampaignConfig& cfg);

/** \brief Envelope ratios per variant, the Olver baseline, and Gamma polylines. */
Report cmd_sweep_estimates(const CampaignConfig& cfg);

/** \brief Picard solves cross-checked against the psi oracle. */
Report cmd_picard(const CampaignConfig& cfg);

/** \brief Contour integral ratios along Gamma_lambda. */
Report cmd_appendix_b(const CampaignConfig& cfg);

/** \brief Gamma_lambda polylines and domain boundary point clouds. */
Report cmd_gamma_trace(const CampaignConfig& cfg);

Report run_command(const CampaignConfig& cfg);

/** \brief File-name form of a variant: "0", "plus", "minus", "star". */
const char* variant_file_name(SolutionVariant v);

} // namespace pcf::harness

#endif
