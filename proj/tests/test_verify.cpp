#include <gtest/gtest.h>

#include <set>

#include "nullcone/verify.hpp"

using namespace nullcone;

namespace nullcone {
void PrintTo(SuiteId id, std::ostream* os) { *os << to_string(id); }
} // namespace nullcone

class SuiteHealth : public ::testing::TestWithParam<SuiteId> {};

TEST_P(SuiteHealth, PassesWithNegativeControl) {
    const VerifyConfig cfg = VerifyConfig::defaults();
    const SuiteResult s = run_single_suite(GetParam(), cfg);
    ASSERT_FALSE(s.checks.empty());
    int controls = 0;
    for (const auto& c : s.checks) {
        if (c.expected_fail) {
            ++controls;
            EXPECT_FALSE(c.passed) << c.name;
        }
        if (!c.finding) {
            EXPECT_TRUE(c.healthy()) << c.name << ": residual " << c.residual << " " << c.note;
        }
        EXPECT_GT(c.samples, 0u) << c.name;
    }
    EXPECT_GE(controls, 1);
}

INSTANTIATE_TEST_SUITE_P(All, SuiteHealth, ::testing::ValuesIn(kAllSuites),
                         [](const auto& info) {
                             std::string n(to_string(info.param));
                             for (auto& ch : n)
                                 if (ch == '-') ch = '_';
                             return n;
                         });

TEST(Verify, SuiteNamesRoundTrip) {
    for (auto id : kAllSuites) EXPECT_EQ(parse_suite(to_string(id)), id);
    EXPECT_EQ(parse_suite("all"), SuiteId::All);
    EXPECT_THROW(parse_suite("bogus"), InvalidConfig);
}

TEST(Verify, AuditCoversEveryKindAndMode) {
    const SuiteResult s = run_single_suite(SuiteId::SmarandacheCurvatureAudit, VerifyConfig::defaults());
    std::set<std::string> kinds, modes;
    int matches = 0;
    for (const auto& r : s.reports) {
        kinds.insert(r.subject);
        modes.insert(r.mode);
        EXPECT_EQ(r.records.size(), 11u);
        matches += r.counts().at("match");
    }
    for (auto k : kAllKinds) EXPECT_TRUE(kinds.count(std::string(to_string(k)))) << to_string(k);
    EXPECT_TRUE(kinds.count("self-test"));
    EXPECT_TRUE(modes.count("literal"));
    EXPECT_TRUE(modes.count("corrected"));
    EXPECT_GE(matches, 1);
    bool findings = false;
    for (const auto& c : s.checks) findings |= c.finding && !c.passed;
    EXPECT_TRUE(findings);
}

TEST(Verify, FindingsGateOnlyStrict) {
    const AuditReport r = run_suite(SuiteId::SmarandacheCurvatureAudit, VerifyConfig::defaults());
    EXPECT_TRUE(r.ok(false));
    EXPECT_FALSE(r.ok(true));
}

TEST(Verify, ReportsAreByteIdentical) {
    const VerifyConfig cfg = VerifyConfig::defaults();
    EXPECT_EQ(to_json(run_suite(SuiteId::FrenetResidual, cfg)).dump(2),
              to_json(run_suite(SuiteId::FrenetResidual, cfg)).dump(2));
    EXPECT_EQ(to_text(run_suite(SuiteId::Lemma1, cfg)), to_text(run_suite(SuiteId::Lemma1, cfg)));
}

TEST(Verify, AllContainsEverySuite) {
    const AuditReport r = run_suite(SuiteId::All, VerifyConfig::defaults());
    ASSERT_EQ(r.suites.size(), kAllSuites.size());
    for (const auto& s : r.suites) EXPECT_FALSE(s.checks.empty());
    const auto j = to_json(r);
    EXPECT_TRUE(j.contains("header"));
    EXPECT_EQ(j.at("header").at("metric").get<std::string>(), kMetricSignature);
}

TEST(Verify, InvalidConfigRejected) {
    VerifyConfig cfg = VerifyConfig::defaults();
    cfg.samples = 1;
    EXPECT_THROW(run_suite(SuiteId::FrameGram, cfg), InvalidConfig);
    cfg = VerifyConfig::defaults();
    cfg.tol.gram = 0;
    EXPECT_THROW(cfg.validate(), InvalidConfig);
    cfg = VerifyConfig::defaults();
    cfg.audit_cases.push_back({{}, SmarandacheKind::GammaXiW, {"t"}});
    EXPECT_THROW(cfg.validate(), InvalidConfig);
}

TEST(Verify, SeedChangesRandomizedInputsOnly) {
    VerifyConfig a = VerifyConfig::defaults(), b = VerifyConfig::defaults();
    b.seed = a.seed + 1;
    const auto ra = run_single_suite(SuiteId::Lemma1, a), rb = run_single_suite(SuiteId::Lemma1, b);
    ASSERT_EQ(ra.checks.size(), rb.checks.size());
    for (std::size_t i = 0; i < ra.checks.size(); ++i) EXPECT_EQ(ra.checks[i].passed, rb.checks[i].passed);
}
