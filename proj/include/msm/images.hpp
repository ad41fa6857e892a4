#pragma once

// Closed-form images of t^{rho-1} W_{p,b,c}(t) (left operator) and
// t^{rho-1} W_{p,b,c}(1/t) (right operator) as Fox-Wright and 6F7 series,
// the term-by-term oracle through the power images, and the trigonometric
// specializations.

#include <optional>
#include <string>

#include "msm/operators.hpp"
#include "msm/series.hpp"

namespace msm {

enum class Side { left, right };
enum class Representation { wright, hyp6f7 };
enum class TrigKind { cos, cosh, sin, sinh };

struct ImageRequest {
    MsmParams params;
    Complex rho = 1.0;
    BesselParams bessel{0.0, 1.0, 1.0};
    double x = 1.0;
    Side side = Side::left;
    Representation representation = Representation::wright;
};

struct TrigImageRequest {
    MsmParams params;
    Complex rho = 1.0;
    Complex c = 1.0;
    double x = 1.0;
    TrigKind kind = TrigKind::cos;
    Side side = Side::left;
    Representation representation = Representation::wright;
};

/// Names the first violated admissibility condition, or nullopt if the request
/// is admissible.
std::optional<std::string> inadmissibility_reason(const ImageRequest& req);
inline bool admissible(const ImageRequest& req) { return !inadmissibility_reason(req); }

/// The 3psi4 specs behind the Wright-form images (prefactor excluded).
WrightSpec left_wright_spec(const ImageRequest& req);
WrightSpec right_wright_spec(const ImageRequest& req);

SeriesResult image_wright_left(const ImageRequest& req, double tol, int max_terms = kDefaultMaxTerms);
SeriesResult image_wright_right(const ImageRequest& req, double tol, int max_terms = kDefaultMaxTerms);
SeriesResult image_6f7_left(const ImageRequest& req, double tol, int max_terms = kDefaultMaxTerms);
SeriesResult image_6f7_right(const ImageRequest& req, double tol, int max_terms = kDefaultMaxTerms);

/// Dispatch on req.side and req.representation.
SeriesResult image(const ImageRequest& req, double tol, int max_terms = kDefaultMaxTerms);

/// Sum over k = 0..n_terms of the Bessel coefficients times the power images
/// at rho + p + 2k (left) or rho - p - 2k (right).
SeriesResult termwise_oracle(const ImageRequest& req, int n_terms);

/// Same sum, truncated by the two-small-terms rule.
SeriesResult termwise_adaptive(const ImageRequest& req, double tol, int max_terms = kDefaultMaxTerms);

/// A trig request rewritten as a Bessel image: result = scale * image(request).
struct TrigSpecialization {
    ImageRequest request;
    Complex scale;
};
TrigSpecialization specialize(const TrigImageRequest& req, Complex b = 1.0);

std::optional<std::string> inadmissibility_reason(const TrigImageRequest& req);

/// Image of t^{rho-1} cos(ct) etc. (left) or t^{rho-1} cos(c/t) etc. (right),
/// derived from the Bessel images with p = -b/2 or 1 - b/2.
SeriesResult trig_image(const TrigImageRequest& req, double tol, int max_terms = kDefaultMaxTerms,
                        Complex b = 1.0);

} // namespace msm
