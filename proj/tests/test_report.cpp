#include "doctest.h"
#include "skein/report.hpp"

using namespace skein;

TEST_CASE("render verdicts") {
  VerificationReport r{"pentagon", "N=4"};
  r.check("w=1", Scalar());
  std::string t = render(r, Format::Text);
  CHECK(t.substr(t.size() - 9) == "VERIFIED\n");
  r.inject_error();
  t = render(r, Format::Text);
  CHECK(t.find("FALSIFIED") != std::string::npos);
  CHECK(t.find("injected") != std::string::npos);
}

TEST_CASE("json round trip") {
  VerificationReport r{"sw", "N=3"};
  r.check("w=2 (0,2)", sZ() * sA());
  r.seconds = 1.25;
  std::string j = render(r, Format::Json);
  VerificationReport back = report_from_json(j);
  CHECK(render(back, Format::Json) == j);
  CHECK(back.residuals.size() == 1);
  CHECK(back.residuals[0].value == (sZ() * sA()).str());
  CHECK_THROWS(parse_format("yaml"));
}
