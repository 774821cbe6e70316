#include "hgs/context.hpp"

#include <algorithm>
#include <cstdlib>

namespace hgs {

Caps Caps::from_env() {
  Caps caps;
  if (const char* env = std::getenv("HGS_MAX_HOL_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) caps.max_hol_order = static_cast<unsigned>(v);
  }
  return caps;
}

std::shared_ptr<const GaloisContext> GaloisContext::make(CayleyGroup g,
                                                         Subgroup stab) {
  if (!is_subgroup(g, stab)) throw SpecError("stabilizer is not a subgroup");
  auto ctx = std::make_shared<GaloisContext>();
  ctx->group = std::move(g);
  ctx->stabilizer = std::move(stab);
  ctx->cosets = coset_action(ctx->group, ctx->stabilizer);
  ctx->degree = ctx->cosets.action.degree;
  ctx->image = ctx->cosets.action.image_from(minimal_generators(ctx->group));
  return ctx;
}

std::shared_ptr<const GaloisContext> GaloisContext::galois_of(CayleyGroup g) {
  return make(std::move(g), Subgroup{{0}});
}

HgsStructure make_structure(std::shared_ptr<const GaloisContext> ctx,
                            PermGroup n) {
  if (n.degree() != ctx->degree)
    throw SpecError("structure degree does not match its context");
  if (!n.is_regular())
    throw InternalError("structure group is not regular");
  if (!ctx->image.normalizes(n))
    throw InternalError("structure group is not normalized by the context action");

  HgsStructure s;
  s.context = std::move(ctx);
  auto [abstract, aligned] = reconstruct_group(n);
  (void)aligned;
  s.type = identify_type(abstract);
  s.group = std::move(n);

  if (s.context->galois()) {
    const CayleyGroup& g = s.context->group;
    PermGroup rho = PermGroup::from_elements(g.order(), right_translations(g),
                                             /*verify=*/false);
    s.flags.classical = s.group == rho;
    s.flags.canonical_nonclassical =
        !g.is_abelian() && s.group == s.context->image;
  }
  return s;
}

}  // namespace hgs
