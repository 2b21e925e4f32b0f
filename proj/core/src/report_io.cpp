#include <cmath>
#include <complex>
#include <string>

#include <json.hpp>

#include "dit/oracle.hpp"
#include "dit/stark.hpp"

namespace dit {

namespace {

using json = nlohmann::ordered_json;

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

// JSON has no infinity; an absent Stark field is written as the string "inf".
json detuning_json(double detuning) {
  if (std::isinf(detuning)) return detuning > 0 ? "inf" : "-inf";
  return detuning;
}

}  // namespace

std::string to_json(const GridCheckReport& report) {
  json points = json::array();
  for (const GridCheckPoint& p : report.points) {
    points.push_back({{"detuning", p.detuning},
                      {"analytic_r", complex_json(p.analytic_r)},
                      {"oracle_r", complex_json(p.oracle_r)},
                      {"abs_dev", p.abs_dev},
                      {"converged", p.converged},
                      {"energy_balance", p.energy_balance}});
  }
  json doc{{"points", std::move(points)},
           {"summary", {{"max_dev", report.max_dev}, {"tol", report.tol}, {"pass", report.pass}}}};
  return doc.dump(2) + "\n";
}

std::string stark_sidecar_json(const SystemParams& params, const StarkDrive& drive, LossSign sign) {
  const StarkValue value = stark_operator(params, drive);
  json drive_doc{{"Delta", detuning_json(drive.detuning)}, {"mode", to_string(drive.mode)}};
  if (drive.mode == DriveMode::PhotonNumber) {
    drive_doc["n_photons"] = drive.n_photons;
  } else {
    drive_doc["input_flux"] = drive.input_flux;
  }
  drive_doc["photon_number"] = drive.photon_number(params);

  json doc{{"drive", std::move(drive_doc)},
           {"S", complex_json(value.s)},
           {"shift", value.shift()},
           {"two_photon_loss", value.two_photon_loss()},
           {"loss_sign", to_string(sign)},
           {"effective_dipole_shift", complex_json(effective_dipole_shift(value, sign))}};
  return doc.dump(2) + "\n";
}

}  // namespace dit
