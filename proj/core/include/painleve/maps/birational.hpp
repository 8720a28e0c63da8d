#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "painleve/maps/space.hpp"

namespace painleve {

// Affine action on the parameter vector: target param i =
// sum_j matrix[i][j] * source param j + offset[i].
struct ParamAction {
  std::vector<Var> rows;
  std::vector<Var> cols;
  std::vector<std::vector<Scalar>> matrix;
  std::vector<Scalar> offset;

  bool is_identity() const;
};

// A birational change of coordinates, stored as the pullback of every target
// coordinate: images[v] is the target coordinate v written in source
// coordinates. Applying the map to an expression in target coordinates
// substitutes these images.
class BirationalMap {
 public:
  BirationalMap() = default;
  // Target coordinates without an explicit image must also be source
  // coordinates; they are mapped to themselves.
  BirationalMap(std::string name, PhaseSpace source, PhaseSpace target, Bindings images);

  static BirationalMap identity(const PhaseSpace& space);
  // Parse images given as infix strings.
  static BirationalMap from_strings(std::string name, PhaseSpace source, PhaseSpace target,
                                    const std::vector<std::pair<std::string, std::string>>& images);

  const std::string& name() const { return name_; }
  const PhaseSpace& source() const { return source_; }
  const PhaseSpace& target() const { return target_; }
  const Bindings& images() const { return images_; }
  const RatExpr& image(Var v) const;
  const RatExpr& time_image() const { return image(target_.time); }
  Bindings var_images() const;
  // nullopt when some parameter image is not affine with scalar entries.
  std::optional<ParamAction> param_action() const;

  BirationalMap renamed(std::string name) const;
  BirationalMap with_target(PhaseSpace target) const;
  BirationalMap with_inverse(const BirationalMap& inv) const;
  const BirationalMap* inverse_hint() const { return inverse_.get(); }

  // Same spaces and identical images.
  bool operator==(const BirationalMap& o) const;

 private:
  std::string name_;
  PhaseSpace source_;
  PhaseSpace target_;
  Bindings images_;
  std::shared_ptr<const BirationalMap> inverse_;
};

// Pull an expression in target coordinates back to source coordinates.
RatExpr apply(const BirationalMap& m, const RatExpr& e);

// First a, then b. As automorphisms of the function field this is the
// product a*b: apply(compose(a, b), f) = apply(a, apply(b, f)).
// Throws IncompatibleComposition when a's target is not b's source and
// ExpressionTooLarge when an image exceeds `max_terms`.
BirationalMap compose(const BirationalMap& a, const BirationalMap& b, std::size_t max_terms = 200000);
BirationalMap compose_all(const std::vector<BirationalMap>& maps);

struct IdentityCheck {
  bool modulo_constraint = false;  // every image reduces to its own coordinate
  bool without_constraint = false;
  std::vector<Var> offending;      // coordinates failing modulo the constraint
};

// Source and target must share coordinates.
IdentityCheck identity_check(const BirationalMap& m);
bool is_identity(const BirationalMap& m);
// Target coordinates whose images differ modulo a's source constraint.
std::vector<Var> differing_images(const BirationalMap& a, const BirationalMap& b);

// Inverse by solving the triangular structure of the map: each step solves
// one equation that is affine or Moebius in a single remaining unknown.
// Symbols in `kept` are shared by both sides and left alone. Throws
// NotInvertible when the pattern does not apply.
BirationalMap inverse(const BirationalMap& m, const std::vector<Var>& kept = {});
// Inverse from the hint when present (checked by composition), otherwise
// by the triangular solver.
BirationalMap inverse_of(const BirationalMap& m);

// dx^dy (+ dz^dw) preserved with the time held fixed, modulo the source
// parameter constraint.
bool symplectic_check(const BirationalMap& m);

// Jacobian of the target phase images with respect to the source phase vars.
std::vector<std::vector<RatExpr>> phase_jacobian(const BirationalMap& m);

// g -> g + (a / f) {g, f} on the coordinate functions, with {x, y} = 1
// (and {z, w} = 1). Parameters and time are left alone.
BirationalMap poisson_reflection(const PhaseSpace& space, const RatExpr& f, const RatExpr& a,
                                 std::string name = "w");

// Target-constraint functional pulled back through the map, reduced by the
// source constraint: zero when the map carries one constraint onto the other.
RatExpr constraint_defect(const BirationalMap& m);

// JSON object {name, source, target, images, time, params}.
std::string to_json(const BirationalMap& m);

}  // namespace painleve
