#include <cmath>
#include <set>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "lamb/report.hpp"
#include "lamb/table.hpp"

using namespace lamb;

TEST_CASE("number formatting is locale independent and short") {
  CHECK(format_number(1057.845e6) == "1057845000");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(2.46606141318734e15, 15) == "2.46606141318734e+15");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("table rendering") {
  Table t;
  t.columns = {"name", "value"};
  t.add_row({Cell::str("a,b"), Cell::num(1.5)});
  t.add_row({Cell::str("say \"hi\""), Cell::none()});
  CHECK_THROWS_AS(t.add_row({Cell::str("x")}), std::invalid_argument);
  CHECK(render(t, OutputFormat::Csv) == "name,value\n\"a,b\",1.5\n\"say \"\"hi\"\"\",\n");
  const auto j = nlohmann::json::parse(render(t, OutputFormat::Json));
  CHECK(j.size() == 2);
  CHECK(j[0]["value"].get<double>() == 1.5);
  CHECK(j[1]["value"].is_null());
  const std::string text = render(t, OutputFormat::Table);
  CHECK(text.find("name") == 0);
  CHECK(text.find("----") != std::string::npos);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("report rows") {
  const auto rows = report_cases(builtin_constants());
  std::set<std::string> cases;
  int gated = 0;
  for (const auto& r : rows) {
    cases.insert(r.case_id);
    if (r.gate != Gate::Info) {
      ++gated;
      CHECK(r.criterion >= 2);
      CHECK(r.criterion <= 6);
      CHECK(r.tolerance > 0.0);
    } else {
      CHECK(r.pass());
    }
    CHECK(std::isfinite(r.ours_hz));
  }
  CHECK(cases == std::set<std::string>{"II", "a", "b", "c", "d", "e", "f", "g", "h"});
  CHECK(gated > 40);
  const auto t = report_table(rows);
  CHECK(t.rows.size() == rows.size());
  CHECK(t.columns.size() == 11);
}

TEST_CASE("row gap and discrepancy") {
  ReportRow r;
  r.gate = Gate::Relative;
  r.tolerance = 1e-3;
  r.ours_hz = 1001.0;
  r.reference_hz = 1000.0;
  CHECK(r.gap() == doctest::Approx(1e-3));
  r.ours_hz = 1002.0;
  CHECK_FALSE(r.pass());
  r.experiment_hz = 1000.0;
  CHECK(*r.discrepancy_percent() == doctest::Approx(0.2));
  r.gate = Gate::Absolute;
  r.tolerance = 2.5;
  CHECK(r.pass());
  CHECK_FALSE(all_pass({ReportRow{r}, [] { ReportRow x; x.gate = Gate::Relative; x.reference_hz = 1; x.ours_hz = 2; return x; }()}));
}
