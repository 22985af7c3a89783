#include "cuspgauge/tolerances.hpp"

#include "cuspgauge/errors.hpp"

#include <cstdlib>
#include <string>

namespace cuspgauge {

Tolerances Tolerances::from_env() {
    Tolerances tol;
    const char* raw = std::getenv("CUSPGAUGE_TOL");
    if (!raw || !*raw) return tol;
    try {
        std::string text(raw);
        std::size_t pos = 0;
        tol.geometry = std::stod(text, &pos);
        if (pos < text.size() && text[pos] == ',') {
            tol.ode = std::stod(text.substr(pos + 1));
        } else if (pos != text.size()) {
            throw InvalidInputError("CUSPGAUGE_TOL: trailing characters");
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidInputError("CUSPGAUGE_TOL must be GEOM or GEOM,ODE");
    }
    if (!(tol.geometry > 0.0) || !(tol.ode > 0.0)) {
        throw InvalidInputError("CUSPGAUGE_TOL values must be positive");
    }
    return tol;
}

Tolerances& active_tolerances() {
    static Tolerances tol;
    return tol;
}

} // namespace cuspgauge
