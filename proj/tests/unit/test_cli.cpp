#include "commands.hpp"
#include "records.hpp"
#include "settings.hpp"

#include "ptheta/errors.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace ptheta;
using namespace ptheta::cli;

TEST(Fnv1a, ReferenceVectors) {
  EXPECT_EQ(hex64(fnv1a("")), "cbf29ce484222325");
  EXPECT_EQ(hex64(fnv1a("a")), "af63dc4c8601ec8c");
  EXPECT_EQ(hex64(fnv1a("foobar")), "85944171f73967e8");
}

TEST(ParseComplex, AcceptedForms) {
  EXPECT_EQ(parse_complex("0.5", 40), mp("0.5", "0"));
  EXPECT_EQ(parse_complex("-7.5", 40), mp("-7.5", "0"));
  EXPECT_EQ(parse_complex("0.4+0.1i", 40), mp("0.4", "0.1"));
  EXPECT_EQ(parse_complex("-5.96-6.1i", 40), mp("-5.96", "-6.1"));
  EXPECT_EQ(parse_complex("1e-3+2e-3i", 40), mp("1e-3", "2e-3"));
  EXPECT_EQ(parse_complex("2.5i", 40), mp("0", "2.5"));
  EXPECT_EQ(parse_complex("-i", 40), mp("0", "-1"));
  EXPECT_EQ(parse_complex("0.4, -0.1", 40), mp("0.4", "-0.1"));
  EXPECT_THROW(parse_complex("", 40), ParseError);
  EXPECT_THROW(parse_complex("0.4+xi", 40), ParseError);
}

TEST(SettingsTest, ConfigThenEnvironmentThenFlags) {
  const auto path = std::filesystem::temp_directory_path() / "ptheta_settings_test.cfg";
  {
    std::ofstream out(path);
    out << "# comment\nprecision = 30\nsubdiv.separ = 5  # trailing\nscan.grid=32\n";
  }
  Settings s;
  apply_config(s, read_config(path.string()));
  EXPECT_EQ(s.precision, 30);
  EXPECT_EQ(s.subdiv_separ, 5);
  EXPECT_EQ(s.scan_grid, 32);
  setenv("THETA_PRECISION", "50", 1);
  apply_environment(s);
  unsetenv("THETA_PRECISION");
  EXPECT_EQ(s.precision, 50);
  EXPECT_EQ(s.tolerance_or_default(), "1e-42");
  std::filesystem::remove(path);
}

TEST(SettingsTest, BadConfigIsRejected) {
  Settings s;
  EXPECT_THROW(apply_config(s, {{"nonsense", "1"}}), ParseError);
  EXPECT_THROW(apply_config(s, {{"precision", "forty"}}), ParseError);
  EXPECT_THROW(read_config("/nonexistent/ptheta.cfg"), ParseError);
}

TEST(Commands, EvalAtOriginIsOne) {
  Settings s;
  const Outcome o = run_eval(s, EvalArgs{"0.3", "0", false});
  EXPECT_EQ(o.exit_code, kPass);
  EXPECT_EQ(o.result["value"]["re"], "1");
  EXPECT_EQ(o.result["value"]["im"], "0");
}

TEST(Commands, EvalJetHasDerivatives) {
  Settings s;
  const Outcome o = run_eval(s, EvalArgs{"0.4+0.1i", "-2", true});
  ASSERT_TRUE(o.result.contains("jet"));
  EXPECT_TRUE(o.result["jet"].contains("dzz"));
  EXPECT_TRUE(o.result["jet"]["tail"].contains("theta_star"));
}

TEST(Commands, EvalOutsideDiskThrowsDomain) {
  Settings s;
  EXPECT_THROW(run_eval(s, EvalArgs{"1.5", "1", false}), DomainError);
}

TEST(Commands, CertifyExitCodes) {
  Settings s;
  CertifyArgs a;
  a.lemma = "domination";
  a.q_abs = "0.3";
  EXPECT_EQ(run_certify(s, a).exit_code, kFailed);
  a.q_abs = "0.2";
  EXPECT_EQ(run_certify(s, a).exit_code, kPass);
  CertifyArgs sep;
  sep.lemma = "separ";
  sep.subdiv = 2;
  EXPECT_EQ(run_certify(s, sep).exit_code, kInconclusive);
  sep.subdiv = 16;
  EXPECT_EQ(run_certify(s, sep).exit_code, kPass);
}

TEST(Commands, SeriesReportsCauchyFromFive) {
  Settings s;
  const Outcome o = run_series(s, SeriesArgs{5, 10});
  EXPECT_EQ(o.exit_code, kPass);
  EXPECT_TRUE(o.result["cauchy"]["passed"].get<bool>());
  EXPECT_EQ(o.result["phi_coeffs"][0], "0");
  EXPECT_FALSE(run_series(s, SeriesArgs{3, 6}).result.contains("cauchy"));
}

TEST(Commands, ZerosOutputIsDeterministic) {
  Settings s;
  const ZerosArgs a{"0.3+0.2i", 6, true};
  EXPECT_EQ(run_zeros(s, a).result.dump(), run_zeros(s, a).result.dump());
}

TEST(Commands, SpectrumNeedsExactlyOneRegion) {
  Settings s;
  SpectrumArgs a;
  EXPECT_THROW(run_spectrum(s, a), DomainError);
  a.real_table = 2;
  a.negative_table = 2;
  EXPECT_THROW(run_spectrum(s, a), DomainError);
}

TEST(Records, CsvHeaderAndRows) {
  SpectralPoint p;
  p.q = mp("0.5", "0");
  p.kind = SpectralKind::real_positive;
  const std::string csv = spectrum_csv({p});
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "index,kind,q_re,q_im,modulus,z_re,z_im,residual_theta,residual_theta_z,validated");
  EXPECT_NE(csv.find("1,real_positive,0.5,0,0.5"), std::string::npos);
}
