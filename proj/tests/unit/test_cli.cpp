#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "qentropy/cli/commands.hpp"
#include "qentropy/cli/input.hpp"
#include "qentropy/cli/report.hpp"
#include "qentropy/errors.hpp"

using namespace qentropy;
using namespace qentropy::cli;

namespace {

const std::string kData = QENTROPY_DATA;

const ResultEntry& entry(const RunReport& r, const std::string& name) {
  for (const auto& e : r.results) {
    if (e.name == name) {
      return e;
    }
  }
  throw std::runtime_error("no result " + name);
}

}  // namespace

TEST(Input, LineFormatWithComments) {
  const auto p = parse_distribution("# header\n 0.25\n\n0.75  \n# trailing\n");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], 0.25);
  EXPECT_EQ(p[1], 0.75);
}

TEST(Input, JsonFormat) {
  const auto p = parse_distribution("  {\"probs\": [0.5, 0.25, 0.25]}");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[1], 0.25);
}

TEST(Input, ByteOrderMarkIgnored) {
  EXPECT_EQ(parse_distribution("\xEF\xBB\xBF" "1\n").size(), 1u);
}

TEST(Input, ErrorKinds) {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const InputError& e) {
      return e.kind();
    }
    return ErrorKind::numerical_failure;
  };
  EXPECT_EQ(kind_of([] { parse_distribution("0.5\nhalf\n"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { parse_distribution("{\"probs\": 3}"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { parse_distribution("{\"probs\": [0.5,"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { parse_distribution("0.3\n0.6\n"); }), ErrorKind::validation_error);
  EXPECT_EQ(kind_of([] { parse_distribution("# nothing\n"); }), ErrorKind::validation_error);
  EXPECT_EQ(kind_of([] { parse_distribution("1.5\n-0.5\n"); }), ErrorKind::validation_error);
  EXPECT_EQ(kind_of([] { load_distribution(kData + "/missing.txt"); }), ErrorKind::file_not_found);
}

TEST(Report, PassRequiresEveryCheck) {
  RunReport r;
  r.add_value("info", 1e9);
  r.add_check("a", 1e-12, 1e-10);
  r.finalize();
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.exit_status(), ExitStatus::pass);
  r.add_check("b", 2e-10, 1e-10);
  r.finalize();
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.exit_status(), ExitStatus::verification_failure);
  r.add_check("c", std::nan(""), 1.0);
  EXPECT_FALSE(r.results.back().within());
}

TEST(Report, ErrorsMapToExitStatus) {
  RunReport r;
  r.error = ErrorKind::parse_error;
  r.finalize();
  EXPECT_EQ(r.exit_status(), ExitStatus::input_error);
  r.error = ErrorKind::numerical_failure;
  EXPECT_EQ(r.exit_status(), ExitStatus::numerical_failure);
}

TEST(Report, NumberFormatting) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1e-300), "1e-300");
  EXPECT_EQ(format_number(2.0 / 3.0), "0.66666666666666663");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(-INFINITY), "-inf");
}

TEST(Report, StructuredLayout) {
  RunReport r;
  r.command = "verify";
  r.add_input("equation", "cor3");
  r.add_check("sup_abs", 0.0, 1e-11, {0.5, 1.0});
  r.set_tolerance("sup_abs", 1e-11);
  r.finalize();
  EXPECT_EQ(render(r, ReportFormat::structured),
            "{\n"
            "  \"command\": \"verify\",\n"
            "  \"inputs\": {\n"
            "    \"equation\": \"cor3\"\n"
            "  },\n"
            "  \"results\": [\n"
            "    {\"name\": \"sup_abs\", \"value\": 0, \"tolerance\": 9.9999999999999994e-12, "
            "\"within\": true, \"location\": [0.5, 1]}\n"
            "  ],\n"
            "  \"tolerances\": {\n"
            "    \"sup_abs\": 9.9999999999999994e-12\n"
            "  },\n"
            "  \"pass\": true\n"
            "}\n");
  const std::string text = render(r, ReportFormat::text);
  EXPECT_NE(text.find("command: verify\n"), std::string::npos);
  EXPECT_NE(text.find("pass: true\n"), std::string::npos);
}

TEST(CmdEntropy, UniformTwoTsallis) {
  EntropyOptions o;
  o.file = kData + "/uniform2.txt";
  o.family = "tsallis";
  o.params.q = 2.0;
  const auto r = cmd_entropy(o);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(entry(r, "value").value, 0.5, 1e-15);
  EXPECT_LE(entry(r, "three_form_gap").value, 1e-13);
}

TEST(CmdEntropy, PointMassIsZeroForEveryFamily) {
  for (const std::string family : {"shannon", "renyi", "tsallis", "tsallis_normalized", "two_param"}) {
    EntropyOptions o;
    o.file = kData + "/point_mass.txt";
    o.family = family;
    o.params = {0.5, 2.0, 3.0};
    const auto r = cmd_entropy(o);
    EXPECT_TRUE(r.pass) << family;
    EXPECT_EQ(entry(r, "value").value, 0.0) << family;
  }
}

TEST(CmdEntropy, Errors) {
  EntropyOptions o;
  o.file = kData + "/sum_0_9.txt";
  EXPECT_EQ(cmd_entropy(o).error, ErrorKind::validation_error);
  o.file = kData + "/garbled.txt";
  EXPECT_EQ(cmd_entropy(o).error, ErrorKind::parse_error);
  o.file = kData + "/missing.txt";
  EXPECT_EQ(cmd_entropy(o).error, ErrorKind::file_not_found);
  o.file = kData + "/uniform2.txt";
  o.family = "renyi";  // no --q
  EXPECT_EQ(cmd_entropy(o).exit_status(), ExitStatus::input_error);
  o.params.q = -1.0;
  EXPECT_EQ(cmd_entropy(o).exit_status(), ExitStatus::input_error);
  o.family = "boltzmann";
  EXPECT_EQ(cmd_entropy(o).exit_status(), ExitStatus::input_error);
}

TEST(CmdEntropy, JsonFileMatchesLibrary) {
  EntropyOptions o;
  o.file = kData + "/three.json";
  o.family = "renyi";
  o.params.q = 2.0;
  const auto r = cmd_entropy(o);
  EXPECT_NEAR(entry(r, "value").value, -std::log(0.04 + 0.09 + 0.25), 1e-15);
}

TEST(CmdVerify, ClosedFormPasses) {
  VerifyOptions o;
  o.equation = "thm2";
  o.params.alpha = 2.0;
  o.params.beta = 3.0;
  const auto r = cmd_verify(o);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(entry(r, "points_evaluated").value, 40000.0);
}

TEST(CmdVerify, NonSolutionAndPerturbationFail) {
  VerifyOptions o;
  o.equation = "prop1";
  o.params.q = 0.5;
  o.candidate = Candidate::one_minus_x;
  auto r = cmd_verify(o);
  EXPECT_EQ(r.exit_status(), ExitStatus::verification_failure);
  EXPECT_GT(entry(r, "sup_abs").value, 1e-3);

  o.candidate = Candidate::closed_form;
  o.perturb = 1e-6;
  r = cmd_verify(o);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(entry(r, "sup_abs").value, 1e-8);
}

TEST(CmdVerify, InvalidInputs) {
  VerifyOptions o;
  o.equation = "thm2";  // missing alpha, beta
  EXPECT_EQ(cmd_verify(o).exit_status(), ExitStatus::input_error);
  o.equation = "nope";
  EXPECT_EQ(cmd_verify(o).exit_status(), ExitStatus::input_error);
  o.equation = "cor3";
  o.c = -1.0;
  EXPECT_EQ(cmd_verify(o).exit_status(), ExitStatus::input_error);
  o.c = 1.0;
  o.grid.count = 1;
  EXPECT_EQ(cmd_verify(o).exit_status(), ExitStatus::input_error);
  EXPECT_THROW(parse_candidate("sin"), ValidationError);
}

TEST(CmdCharacterize, BothFamiliesPass) {
  CharacterizeOptions o;
  o.params.q = 2.0;
  auto r = cmd_characterize(o);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(entry(r, "extracted_constant").value, 1.0, 1e-5);

  o.params = {std::nullopt, 0.5, 2.0};
  o.c = 0.5;
  r = cmd_characterize(o);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(entry(r, "extracted_constant").value, 0.5, 1e-5);
}

TEST(CmdCharacterize, AmbiguousParameters) {
  CharacterizeOptions o;
  EXPECT_EQ(cmd_characterize(o).exit_status(), ExitStatus::input_error);
  o.params = {2.0, 2.0, 3.0};
  EXPECT_EQ(cmd_characterize(o).exit_status(), ExitStatus::input_error);
}

TEST(CmdIdentities, FilesAndCorpus) {
  IdentitiesOptions o;
  o.file_p = kData + "/uniform2.txt";
  o.file_q = kData + "/four.txt";
  o.qs = {0.25, 0.5, 2.0, 4.0};
  auto r = cmd_identities(o);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.results.size(), 4u * 7u);

  o = {};
  o.seed = 5;
  o.pairs = 50;
  r = cmd_identities(o);
  EXPECT_TRUE(r.pass);
}

TEST(CmdIdentities, ZeroEntriesSkipPointwiseRows) {
  IdentitiesOptions o;
  o.file_p = kData + "/uniform2.txt";
  o.file_q = kData + "/point_mass.txt";
  o.qs = {2.0};
  const auto r = cmd_identities(o);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.results.size(), 3u);
}

TEST(CmdIdentities, Errors) {
  IdentitiesOptions o;
  EXPECT_EQ(cmd_identities(o).exit_status(), ExitStatus::input_error);
  o.file_p = kData + "/uniform2.txt";
  o.file_q = kData + "/sum_0_9.txt";
  EXPECT_EQ(cmd_identities(o).error, ErrorKind::validation_error);
  o.file_q = kData + "/uniform2.txt";
  o.qs = {0.0};
  EXPECT_EQ(cmd_identities(o).exit_status(), ExitStatus::input_error);
}

TEST(Run, InProcessDispatch) {
  const char* argv[] = {"qentropy", "verify", "--equation", "cor3", "--format", "text"};
  std::ostringstream out, err;
  EXPECT_EQ(run(6, argv, out, err), 0);
  EXPECT_NE(out.str().find("equation: cor3"), std::string::npos);
  EXPECT_TRUE(err.str().empty());

  const char* bad[] = {"qentropy", "verify", "--grid-count", "many"};
  std::ostringstream out2, err2;
  EXPECT_EQ(run(4, bad, out2, err2), 2);

  const char* spacing[] = {"qentropy", "verify", "--equation", "cor3", "--grid-spacing", "log"};
  std::ostringstream out3, err3;
  EXPECT_EQ(run(6, spacing, out3, err3), 2);
  EXPECT_NE(out3.str().find("validation_error"), std::string::npos);
}
