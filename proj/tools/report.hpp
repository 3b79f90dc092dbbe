#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stoclab/constants.hpp"
#include "stoclab/cosmology.hpp"
#include "stoclab/dirac.hpp"
#include "stoclab/kerr_newman.hpp"
#include "stoclab/nelson.hpp"
#include "stoclab/random_walk.hpp"

// Machine-readable output. Key order is fixed by construction (ordered_json)
// and documented in the README; doubles print in shortest round-trip form, so
// identical inputs give byte-identical payloads.
namespace stoclab::report {

using json = nlohmann::ordered_json;

json metadata(const std::string& subcommand, std::uint64_t seed, const std::string& rng_name,
              double wall_time_s);

// Full document: metadata first, results last, so everything after the
// "results" key is comparable between runs.
std::string document(const json& metadata, const json& results);

json constants_results(const ConstantsTable& table);

json walk_results(const WalkSpec& spec, const WalkEnsembleResult& res);
std::string walk_csv(const WalkSpec& spec, const std::vector<std::array<double, 3>>& disp);

json nelson_results(const QuantumModel& model, const DiffusionSpec& spec,
                    const WalkerEnsemble& ens, const DensityReport& density);
std::string nelson_csv(const WalkerEnsemble& ens);

struct DiracRun {
  double mass = 1.0;
  double sigma = 1.0;
  double p0 = 0.0;
  std::string band = "both";
  std::string method = "checkerboard";
  std::string units = "natural";
  double dx = 1.0;
  std::size_t points = 0;
  double t_end = 0.0;
  // m c^2 / hbar: the per-unit-time reversal weight of the checkerboard walk.
  // Distinct from the band-interference frequency 2E/hbar that zitter
  // analysis measures; both appear in the output.
  double flip_rate = 0.0;
};

json dirac_results(const DiracRun& run, const std::vector<double>& times,
                   const std::vector<double>& mean_x, const std::vector<double>& norms,
                   const EvolveDiagnostics& diag, const std::optional<ZitterReport>& zitter,
                   const std::string& zitter_skip_reason);
std::string dirac_csv(const std::vector<double>& times, const std::vector<double>& mean_x,
                      const std::vector<double>& norms);

json kn_results(const KNConfig& cfg, ChargeTerm term, const KNClassification& cls,
                double discriminant);

json cosmo_results(const CosmologySpec& spec, const CosmologyTrajectory& traj);
std::string cosmo_csv(const CosmologyTrajectory& traj);

json audit_results(const AuditInputs& in, const std::string& particle,
                   const std::vector<AuditRow>& rows);

}  // namespace stoclab::report
