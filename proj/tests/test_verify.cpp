#include <gtest/gtest.h>

#include <set>

#include "isotriv/verify.hpp"

using namespace isotriv;
using namespace isotriv::verify;

TEST(Verify, AllChecksPass) {
  const auto report = verify_claims();
  for (const auto& c : report.checks) EXPECT_TRUE(c.pass) << c.id << ": " << c.computed;
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.failed(), 0u);
  EXPECT_GE(report.passed(), 40u);
  std::set<std::string> ids;
  for (const auto& c : report.checks) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.location.empty()) << c.id;
  }
  const auto j = report.to_json();
  EXPECT_EQ(j["summary"]["total"], report.checks.size());
}

TEST(Verify, TamperedTableFails) {
  kodaira::FibreTable table = kodaira::standard_table();
  for (auto& row : table.rows) {
    if (row.kind == kodaira::FibreKind::IVstar) row.euler = 7;
  }
  VerifyOptions options;
  options.table = &table;
  options.rigidity = false;
  const auto report = verify_claims(options);
  EXPECT_FALSE(report.ok());
  std::set<std::string> failed;
  for (const auto& c : report.checks) {
    if (!c.pass) failed.insert(c.id);
  }
  EXPECT_TRUE(failed.count("monodromy-table/IVstar"));
  EXPECT_FALSE(failed.count("monodromy-table/IIstar"));
  EXPECT_NE(report.to_text().find("FAIL monodromy-table/IVstar"), std::string::npos);
}

TEST(Verify, SkippingRigidityDropsThoseChecks) {
  VerifyOptions options;
  options.rigidity = false;
  for (const auto& c : verify_claims(options).checks) EXPECT_NE(c.id.rfind("rigidity/", 0), 0u) << c.id;
}
