#include "btws/error.hpp"
#include "btws/metabelian.hpp"

namespace btws::metabelian {

namespace {

  long wrap(long a, long modulus) {
    long const r = a % modulus;
    return r < 0 ? r + modulus : r;
  }

}  // namespace

DihedralElement::DihedralElement(long D, long a, bool reflection)
    : _D(D), _a(wrap(a, 2 * D)), _reflection(reflection) {
  if (D < 1 || D % 2 == 0) {
    throw Error(ErrorKind::InvalidArgument, "binary dihedral order needs odd D >= 1");
  }
}

DihedralElement DihedralElement::rotation(long D, long a) { return {D, a, false}; }
DihedralElement DihedralElement::reflection(long D, long a) { return {D, a, true}; }

DihedralElement DihedralElement::inverse() const {
  return _reflection ? DihedralElement(_D, _a + _D, true) : DihedralElement(_D, -_a, false);
}

DihedralElement operator*(DihedralElement const& x, DihedralElement const& y) {
  if (x._D != y._D) {
    throw Error(ErrorKind::InvalidArgument, "binary dihedral elements of different orders");
  }
  long const D = x._D;
  if (!x._reflection && !y._reflection) {
    return {D, x._a + y._a, false};
  }
  if (!x._reflection) {
    return {D, y._a - x._a, true};
  }
  if (!y._reflection) {
    return {D, x._a + y._a, true};
  }
  return {D, y._a - x._a + D, false};
}

}  // namespace btws::metabelian
