#include "hrte/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "hrte/errors.hpp"

namespace hrte {
namespace {

// FFTW planner calls are not thread-safe; executing a plan on fresh arrays
// via fftw_execute_dft is. Plans are created once per (n, M, direction) with
// FFTW_ESTIMATE | FFTW_UNALIGNED so they apply to any caller buffer and stay
// deterministic across processes.
class PlanCache {
public:
    static fftw_plan get(const GridSpec& g, int sign) {
        static PlanCache cache;
        std::scoped_lock lock(cache.mutex_);
        const Key key{g.n, g.M, sign};
        auto it = cache.plans_.find(key);
        if (it != cache.plans_.end()) return it->second;

        std::vector<int> dims(g.n, g.M);
        std::vector<fftw_complex> a(g.size()), b(g.size());
        fftw_plan p = fftw_plan_dft(g.n, dims.data(), a.data(), b.data(), sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw_plan_dft failed");
        cache.plans_.emplace(key, p);
        return p;
    }

private:
    using Key = std::tuple<int, int, int>;
    std::mutex mutex_;
    std::map<Key, fftw_plan> plans_;
};

void check_finite(const std::vector<cplx>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) {
            std::ostringstream os;
            os << what << ": non-finite value at flat index " << i;
            throw std::invalid_argument(os.str());
        }
    }
}

} // namespace

SpectralCoeffs forward_transform(const ComplexField& f) {
    check_finite(f.values, "forward_transform");
    SpectralCoeffs out(f.grid);
    fftw_plan p = PlanCache::get(f.grid, FFTW_FORWARD);
    fftw_execute_dft(
        p,
        reinterpret_cast<fftw_complex*>(const_cast<cplx*>(f.values.data())),
        reinterpret_cast<fftw_complex*>(out.coeffs.data()));
    const double scale = 1.0 / static_cast<double>(f.grid.size());
    for (auto& c : out.coeffs) c *= scale;
    return out;
}

ComplexField inverse_transform(const SpectralCoeffs& c) {
    check_finite(c.coeffs, "inverse_transform");
    ComplexField out(c.grid);
    fftw_plan p = PlanCache::get(c.grid, FFTW_BACKWARD);
    fftw_execute_dft(
        p,
        reinterpret_cast<fftw_complex*>(const_cast<cplx*>(c.coeffs.data())),
        reinterpret_cast<fftw_complex*>(out.values.data()));
    return out;
}

} // namespace hrte
