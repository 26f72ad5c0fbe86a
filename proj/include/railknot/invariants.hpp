#pragma once

// Knot invariants of link diagrams and their rail knotoid versions through
// the companion loops.
//
// Conventions:
//   bracket      <O> = 1, delta = -A^2 - A^-2; the A-smoothing of a positive
//                crossing is the orientation-respecting one.
//   X            (-A^3)^(-w) <L>
//   Jones        X with A = t^(-1/4), stored on the quarter grid of t.
//   HOMFLYPT     l P(L+) + l^-1 P(L-) + m P(L0) = 0, P(O) = 1.
//   Kauffman     F = a^(-w) Lambda, Lambda(L+) + Lambda(L-) = z (Lambda(L0) + Lambda(Linf)),
//                Lambda(curl) = a^(+-1) Lambda, Lambda(O) = 1.

#include <string>
#include <variant>
#include <vector>

#include "railknot/closure.hpp"
#include "railknot/diagram.hpp"
#include "railknot/polynomial.hpp"

namespace railknot {

// Crossing-count bounds for the exponential algorithms.
struct Limits {
  int bracket = 20;
  int homflypt = 14;
  int kauffman = 12;

  // A single override for all three bounds, e.g. from RAILKNOT_MAX_CROSSINGS.
  static Limits uniform(int n) { return {n, n, n}; }
  // Defaults, overridden by RAILKNOT_MAX_CROSSINGS when it is set.
  static Limits from_environment();
};

int writhe(const LinkDiagram& l);

Laurent1 bracket(const LinkDiagram& l, const Limits& limits = {});
Laurent1 normalized_bracket(const LinkDiagram& l, const Limits& limits = {});
Laurent1 jones(const LinkDiagram& l, const Limits& limits = {});
Laurent2 homflypt(const LinkDiagram& l, const Limits& limits = {});
Laurent2 kauffman_f(const LinkDiagram& l, const Limits& limits = {});

// Jones specialization of HOMFLYPT: l = i t^-1, m = i (t^-1/2 - t^1/2).
// Every term of a link polynomial has l- and m-degrees of equal parity, so
// the powers of i combine to a sign.
Laurent1 jones_from_homflypt(const Laurent2& p);

// a = -A^3, z = A + A^-1 turns F into the normalized bracket X.
Laurent1 normalized_bracket_from_kauffman(const Laurent2& f);

enum class Family { X, Jones, Homflypt };

using Polynomial = std::variant<Laurent1, Laurent2>;
std::string to_string(const Polynomial& p);

Laurent1 rail_bracket(const RailKnotoidDiagram& d, ClosureSide side, const Limits& limits = {});
Polynomial rail_invariant(const RailKnotoidDiagram& d, Family family, ClosureSide side,
                          Orientation o, const Limits& limits = {});
Laurent2 rail_kauffman(const RailKnotoidDiagram& d, ClosureSide side, const Limits& limits = {});

struct InvariantCertificate {
  Laurent1 bracket_o{kVarA}, bracket_u{kVarA};
  int writhe_o_plus = 0, writhe_u_plus = 0;
  Laurent1 x_o_plus{kVarA}, x_o_minus{kVarA}, x_u_plus{kVarA}, x_u_minus{kVarA};
  Laurent1 jones_o_plus{kVarT}, jones_o_minus{kVarT}, jones_u_plus{kVarT}, jones_u_minus{kVarT};
  Laurent2 homfly_o_plus{kVarsLM}, homfly_o_minus{kVarsLM}, homfly_u_plus{kVarsLM},
      homfly_u_minus{kVarsLM};
  Laurent2 kauffman_o{kVarsAZ}, kauffman_u{kVarsAZ};

  // (field name, rendered value) in the stable serialization order.
  std::vector<std::pair<std::string, std::string>> fields() const;
  // Brackets and writhes change under R1; they only separate regular classes.
  static bool regular_only_field(const std::string& name);
  // JSON object with polynomial strings, fields in the order above.
  std::string to_json() const;

  friend bool operator==(const InvariantCertificate&, const InvariantCertificate&) = default;
};

InvariantCertificate certificate(const RailKnotoidDiagram& d, const Limits& limits = {});

struct Verdict {
  // Invariants can only tell diagrams apart; an empty list means no computed
  // invariant distinguishes them, never that they are equivalent.
  std::vector<std::string> differing_fields;
  bool distinguished() const { return !differing_fields.empty(); }
};

// Compares the isotopy-invariant fields; with regular set, also the bracket
// and writhe fields.
Verdict compare(const InvariantCertificate& a, const InvariantCertificate& b, bool regular = false);
Verdict compare(const RailKnotoidDiagram& a, const RailKnotoidDiagram& b, bool regular = false,
                const Limits& limits = {});

}  // namespace railknot
