// qfi_series.hpp: QFI as a function of time and over (theta, alpha) grids for
// the three evolution backends (TCL2 integration, Dyson polynomial, TEBD).

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qprobe/chainmap.hpp"
#include "qprobe/dyson.hpp"
#include "qprobe/qfi.hpp"
#include "qprobe/tcl.hpp"
#include "qprobe/tebd.hpp"

namespace qprobe {

enum class BackendKind { Tcl, Dyson, Tebd };

struct Backend {
    BackendKind kind = BackendKind::Dyson;
    int dyson_order = 7;
    TclOptions tcl;
    TebdConfig tebd;
    chain::ChainOptions chain;

    // "tcl", "dyson:<k>" or "tebd"
    static Backend parse(std::string_view text);
    std::string label() const;
};

// Bloch: affine-map formula from D and dD/d eta (analytic for Dyson, central
// difference otherwise). Fidelity: 8 (1 - sqrt F) / delta^2 on two evolved states.
enum class QfiMethod { Bloch, Fidelity };

using ChainProvider = std::function<ChainCoefficients(const BathParameters&, int n)>;
ChainProvider direct_chain_provider(const chain::ChainOptions& opts = {});

struct QfiSample {
    double t = 0.0;
    double q = 0.0;     // Q(eta, t)
    double rate = 0.0;  // Q / t; NaN at t = 0
};

struct QfiSeries {
    std::vector<QfiSample> samples;
    double theta = 0.0;
    double alpha = 0.0;
    double omega_s = 0.0;
    BathParameters bath;
    EnvParameter eta = EnvParameter::InverseTemperature;
    std::string backend;
    std::vector<std::string> warnings;
    bool converged = true;
    std::optional<TebdMetadata> tebd_lo, tebd_hi;
};

struct QfiRequest {
    BathParameters bath;
    ProbeConfig probe;
    double alpha = 0.0;
    std::vector<double> times;
    QfiConfig qfi;
    Backend backend;
    QfiMethod method = QfiMethod::Fidelity;
};

// Dynamical maps of the Dyson or TCL backend needed for the QFI at each time:
// either (D, dD) or the pair (D(eta_lo), D(eta_hi)).
struct MapSample {
    double t = 0.0;
    Mat4 d;
    Mat4 d_dot;  // Bloch method
    Mat4 d_lo, d_hi;  // Fidelity method
};
struct MapFamily {
    std::vector<MapSample> samples;
    double delta = 0.0;
    QfiMethod method = QfiMethod::Bloch;
    std::vector<std::string> warnings;
};

MapFamily map_family(const BathParameters& bath, const ProbeConfig& probe, const std::vector<double>& times,
                     const QfiConfig& qfi, const Backend& backend, QfiMethod method);

double qfi_from_maps(const MapSample& s, const MapFamily& f, double alpha);

QfiSeries qfi_series(const QfiRequest& req, const ChainProvider& chains = {});

struct QfiMapCell {
    double theta = 0.0;
    double alpha = 0.0;
    double q = 0.0;
    double ratio = 0.0;
};

struct QfiMap {
    double t = 0.0;
    double q_reference = 0.0;  // theta = pi/2, alpha = 0
    std::vector<double> thetas;
    std::vector<double> alphas;
    std::vector<QfiMapCell> cells;  // theta-major
    std::vector<std::string> warnings;

    const QfiMapCell& at(std::size_t i_theta, std::size_t i_alpha) const {
        return cells[i_theta * alphas.size() + i_alpha];
    }
};

// Fixed-time grid for the Dyson or TCL backend. Throws if the reference Q fails.
QfiMap qfi_map(const BathParameters& bath, double omega_s, const std::vector<double>& thetas,
               const std::vector<double>& alphas, double t, const QfiConfig& qfi, const Backend& backend,
               QfiMethod method);

}  // namespace qprobe
