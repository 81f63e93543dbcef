#include "phistar/records.hpp"

#include <gtest/gtest.h>

using namespace phistar;

namespace {

std::vector<OutputRecord> sample_records() {
    std::vector<OutputRecord> out;
    for (const auto& row : enumerate_phi_star_bounded(1, 4).rows) out.push_back(make_record(row));
    for (const auto& row : enumerate_phi_star_n2(1, 4, 200).merged()) out.push_back(make_record(row));
    for (const auto& row : classify_restricted_shape()) out.push_back(make_record(row));
    return out;
}

}  // namespace

TEST(Records, CsvHeader) {
    std::ostringstream out;
    write_records(out, {}, RecordFormat::csv);
    EXPECT_EQ(out.str(), std::string(csv_header) + "\n");
}

TEST(Records, CsvRoundTrip) {
    for (const auto& rec : sample_records()) {
        const std::string line = to_csv(rec);
        const OutputRecord back = parse_csv(line);
        ASSERT_EQ(back, rec) << line;
        ASSERT_EQ(back.phi_star, phi_star(back.n, to_mpz(back.q)).phi_star) << line;
        ASSERT_EQ(to_csv(back), line);
    }
}

TEST(Records, JsonlRoundTrip) {
    for (const auto& rec : sample_records()) {
        const std::string line = to_jsonl(rec);
        const OutputRecord back = parse_jsonl(line);
        ASSERT_EQ(back, rec) << line;
        ASSERT_EQ(back.phi_star, phi_star(back.n, to_mpz(back.q)).phi_star) << line;
    }
}

TEST(Records, CsvLayout) {
    OutputRecord rec;
    rec.n = 4;
    rec.q = 8;
    rec.q_base = 2;
    rec.q_exp = 3;
    rec.phi_n = 65;
    rec.phi_star = 65;
    rec.indices = std::vector<u64>{1, 3};
    EXPECT_EQ(to_csv(rec), "4,8,2,3,65,65,1;3,,,");
    rec.indices = std::vector<u64>{};
    rec.set_tag = "R";
    EXPECT_EQ(to_csv(rec), "4,8,2,3,65,65,,,,R");
    EXPECT_TRUE(parse_csv(to_csv(rec)).indices->empty());
}

TEST(Records, JsonlNullsAndStrings) {
    OutputRecord rec;
    rec.n = 1;
    rec.q = 10;
    rec.phi_n = 9;
    rec.phi_star = 9;
    EXPECT_EQ(to_jsonl(rec),
              R"({"n":1,"q":10,"q_base":null,"q_exp":null,"phi_n":"9","phi_star":"9","I":null,"c0":null,"c1":null,)"
              R"("set_tag":null})");
    EXPECT_EQ(parse_jsonl(to_jsonl(rec)), rec);
}

TEST(Records, WideValuesSurviveAsStrings) {
    OutputRecord rec;
    rec.n = 97;
    rec.q = 2;
    rec.q_base = 2;
    rec.q_exp = 1;
    rec.phi_n = ipow(2, 97) - 1;
    rec.phi_star = rec.phi_n;
    EXPECT_EQ(parse_jsonl(to_jsonl(rec)).phi_n, rec.phi_n);
    EXPECT_EQ(parse_csv(to_csv(rec)).phi_star, rec.phi_star);
}

TEST(Records, RejectsMalformed) {
    EXPECT_THROW(parse_csv("1,2,3"), std::invalid_argument);
    EXPECT_THROW(parse_csv("x,2,,,1,1,,,,"), std::invalid_argument);
    EXPECT_THROW(parse_csv("3,2,2,1,7,7,1;z,,,"), std::invalid_argument);
    EXPECT_ANY_THROW(parse_jsonl("{\"n\":1}"));
}

TEST(Records, TextFormat) {
    OutputRecord rec;
    rec.n = 4;
    rec.q = 8;
    rec.q_base = 2;
    rec.q_exp = 3;
    rec.phi_n = 65;
    rec.phi_star = 65;
    rec.indices = std::vector<u64>{1, 3};
    EXPECT_EQ(to_text(rec), "n=4 q=8 (2^3) phi_n=65 phi_star=65 I=1,3");
    rec.indices = std::vector<u64>{};
    EXPECT_EQ(to_text(rec), "n=4 q=8 (2^3) phi_n=65 phi_star=65 I=-");
}
