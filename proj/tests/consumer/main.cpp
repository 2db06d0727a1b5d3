#include <arithdeg/arith_degree.hpp>
#include <arithdeg/parse.hpp>

int main() {
  using namespace arithdeg;
  const RingPtr r = PolyRing::standard(3);
  const Ideal i(r, {parse_poly("x0^2*x1", r), parse_poly("x1^2*x2", r), parse_poly("x0*x2^2", r),
                    parse_poly("x2^3", r)});
  return arith_deg(i, 0) == 4 ? 0 : 1;
}
