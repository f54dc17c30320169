#include "drt/core/operators.hpp"

#include "drt/errors.hpp"

namespace drt {

namespace {

void check_rotation(unsigned c, WordSpec spec) {
  if (c >= spec.n()) {
    throw ParameterError("rotation amount must lie in [0, " + std::to_string(spec.n()) + "), got " +
                         std::to_string(c));
  }
}

void check_pair(const ShiftPair& p, WordSpec spec) {
  if (p.is_checked()) {
    if (auto why = ShiftPair::violation(p.a(), p.b(), spec)) {
      throw ParameterError(*why);
    }
  } else if (p.a() > spec.n() || p.b() > spec.n()) {
    throw ParameterError("shift amounts must not exceed the word width");
  }
}

}  // namespace

Word rot_left(Word x, unsigned c, WordSpec spec) {
  check_rotation(c, spec);
  spec.check(x);
  if (c == 0) {
    return x;
  }
  return ((x << c) | (x >> (spec.n() - c))) & spec.mask();
}

Word rot_right(Word x, unsigned c, WordSpec spec) {
  check_rotation(c, spec);
  if (c == 0) {
    spec.check(x);
    return x;
  }
  return rot_left(x, spec.n() - c, spec);
}

Word drt(Word x, const ShiftPair& p, WordSpec spec) {
  check_pair(p, spec);
  spec.check(x);
  return (detail::shl(x, p.a()) ^ detail::shr(x, p.b())) & spec.mask();
}

MapDescriptor MapDescriptor::rot(unsigned c, WordSpec spec) {
  check_rotation(c, spec);
  return MapDescriptor(spec, RotMap{c}, c, spec.n() - c);
}

MapDescriptor MapDescriptor::drt(const ShiftPair& pair, WordSpec spec) {
  check_pair(pair, spec);
  return MapDescriptor(spec, DrtMap{pair}, pair.a(), pair.b());
}

std::string MapDescriptor::name() const {
  if (const auto* r = std::get_if<RotMap>(&map_)) {
    return "ROT(" + std::to_string(r->c) + ")";
  }
  const auto& d = std::get<DrtMap>(map_);
  return "DRT(" + std::to_string(d.pair.a()) + "," + std::to_string(d.pair.b()) + ")";
}

}  // namespace drt
