#pragma once

#include "wcifano/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace wcifano {

// One term of a normal-form equation of L_xy = X \cap {x = y = 0}, written
// in the variables (z, s, t, u) of P(a2, a3, a4, a5).  A nonempty `param`
// marks a general nonzero coefficient (instantiated to a concrete value for
// numeric checks; results must not depend on the choice).
struct LxyTerm {
    Rational coeff = Rational(1);
    std::string param;  // e.g. "lambda"; empty for literal coefficients
    std::array<int, 4> exp{0, 0, 0, 0};
};

struct ForcedMonomial {
    int eq = 1;  // 1 or 2
    std::array<int, 4> exp{0, 0, 0, 0};
};

struct LxyRecord {
    std::vector<std::string> vars;  // always ["z","s","t","u"]
    std::vector<LxyTerm> g1, g2;
    std::vector<std::string> sing;  // singular points, e.g. "p_u"
    std::string witness;            // irreducibility witness ("pi_u", ...)
    std::vector<std::string> conds; // free-text side conditions
    std::vector<ForcedMonomial> forced;  // quasi-smoothness-forced monomials
};

// Maps "p_z".."p_u" to the variable index 0..3; throws SchemaError.
int lxy_point_index(const std::string& point);

// Structural validation against the family shape: equations are weighted
// homogeneous of degrees (d1, d2) in weights (a2..a5), forced monomials are
// present with nonzero coefficient, point ids are valid.  Throws SchemaError
// (message names the family and the offending field).
void lxy_validate(const LxyRecord& rec, const std::vector<long long>& weights,
                  const std::vector<long long>& degrees, int family_no);

// True iff the coordinate point lies on the affine cover germ of L_xy.
bool lxy_on_curve(const LxyRecord& rec, const std::string& point,
                  const Rational& param_value);

// True iff the point is on the curve and the 2x4 Jacobian of (g1, g2) has
// rank < 2 there (cover coordinates).
bool lxy_jacobian_sing_check(const LxyRecord& rec, const std::string& point,
                             const Rational& param_value);

// Multiplicity of the cover germ of L_xy at the point: sets the point
// coordinate to 1, eliminates one variable through the first available pure
// linear term (scanning g1 then g2, then z,s,t,u), and reads off the minimal
// total degree of the resulting plane germ.  Throws NotEliminable when no
// pure linear term exists.
int lxy_mult_at(const LxyRecord& rec, const std::string& point,
                const Rational& param_value);

} // namespace wcifano
