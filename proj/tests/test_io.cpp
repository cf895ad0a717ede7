#include "qwalk/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "test_util.hpp"

using namespace qwalk;
using qwalk::testing::kInvSqrt2;
using qwalk::testing::left_qubit;
namespace fs = std::filesystem;

TEST(ParseComplex, literal_forms) {
    EXPECT_EQ(io::parse_complex("0.5"), cplx(0.5, 0.0));
    EXPECT_EQ(io::parse_complex("-2"), cplx(-2.0, 0.0));
    EXPECT_EQ(io::parse_complex("0.5+0.25i"), cplx(0.5, 0.25));
    EXPECT_EQ(io::parse_complex("1-2i"), cplx(1.0, -2.0));
    EXPECT_EQ(io::parse_complex("-i"), cplx(0.0, -1.0));
    EXPECT_EQ(io::parse_complex("i"), cplx(0.0, 1.0));
    EXPECT_EQ(io::parse_complex("3e-2i"), cplx(0.0, 0.03));
    EXPECT_EQ(io::parse_complex(" 1e+2-1e-1i "), cplx(100.0, -0.1));
}

TEST(ParseComplex, rejects_garbage) {
    for (const char* bad : {"", "abc", "1+", "1+2", "i2", "1..0", "nan", "1,2"}) {
        EXPECT_THROW(io::parse_complex(bad), ParseError) << bad;
    }
}

TEST(ParseComplexList, both_layouts) {
    const auto pairs = io::parse_complex_list("1,0,0,1", 2);
    EXPECT_EQ(pairs[0], cplx(1.0, 0.0));
    EXPECT_EQ(pairs[1], cplx(0.0, 1.0));
    const auto literals = io::parse_complex_list("1,i", 2);
    EXPECT_EQ(literals, pairs);
    EXPECT_THROW(io::parse_complex_list("1,2,3", 2), ParseError);
}

TEST(ParseCoin, presets_and_entries) {
    EXPECT_EQ(io::parse_coin("hadamard").matrix(), hadamard().matrix());
    EXPECT_EQ(io::parse_coin("H").matrix(), hadamard().matrix());
    const Coin id = io::parse_coin("1,0,0,1");
    EXPECT_TRUE(id.degenerate());
    EXPECT_THROW(io::parse_coin("1,1,1,1"), NonUnitary);
    EXPECT_THROW(io::parse_coin("hadamardx"), ParseError);
    const Coin sym = io::parse_symmetric_coin("0,0,0");
    EXPECT_LT(qwalk::testing::max_entry_error(sym.matrix(), hadamard().matrix()), 1e-15);
}

TEST(ParseQubit, presets) {
    const Qubit s = io::parse_qubit("symmetric");
    EXPECT_EQ(s.alpha(), cplx(kInvSqrt2, 0.0));
    EXPECT_EQ(s.beta(), cplx(0.0, kInvSqrt2));
    EXPECT_EQ(io::parse_qubit("left").alpha(), cplx(1.0));
    EXPECT_EQ(io::parse_qubit("right").beta(), cplx(1.0));
    EXPECT_EQ(io::parse_qubit("0,1").beta(), cplx(1.0));
    EXPECT_THROW(io::parse_qubit("1,1"), BadParams);
}

TEST(ParseLists, ints_and_doubles) {
    EXPECT_EQ(io::parse_int_list("1,20,300"), (std::vector<int>{1, 20, 300}));
    EXPECT_EQ(io::parse_double_list("0.5,-1e3"), (std::vector<double>{0.5, -1000.0}));
    EXPECT_THROW(io::parse_int_list("1,x"), ParseError);
    EXPECT_THROW(io::parse_int_list("1.5"), ParseError);
}

TEST(FormatDouble, round_trips_bit_exactly) {
    std::mt19937_64 rng(80);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double value = std::ldexp(u(rng), -static_cast<int>(rng() % 60));
        EXPECT_EQ(std::strtod(io::format_double(value).c_str(), nullptr), value);
    }
    EXPECT_EQ(io::format_double(0.125), "0.125");
}

TEST(DistributionCsv, schema) {
    const auto dist = distribution(evolve(left_qubit(), hadamard(), 3));
    std::istringstream csv(io::distribution_csv(dist));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "k,p");
    const std::vector<std::pair<int, double>> expected{{-3, 0.125}, {-1, 0.625}, {1, 0.125}, {3, 0.125}};
    for (const auto& [k, p] : expected) {
        ASSERT_TRUE(std::getline(csv, line));
        const auto comma = line.find(',');
        EXPECT_EQ(std::stoi(line.substr(0, comma)), k);
        EXPECT_EQ(std::strtod(line.c_str() + comma + 1, nullptr), dist.at(k));
        EXPECT_NEAR(dist.at(k), p, 1e-15);
    }
    EXPECT_FALSE(std::getline(csv, line));
}

TEST(DistributionJson, schema) {
    const auto dist = distribution(evolve(left_qubit(), hadamard(), 3));
    const auto doc = nlohmann::json::parse(io::distribution_json(dist, hadamard(), left_qubit()));
    EXPECT_EQ(doc.at("n"), 3);
    ASSERT_EQ(doc.at("coin").size(), 4u);
    EXPECT_EQ(doc.at("coin")[3][0].get<double>(), -kInvSqrt2);
    ASSERT_EQ(doc.at("phi").size(), 2u);
    ASSERT_EQ(doc.at("distribution").size(), 4u);
    EXPECT_EQ(doc.at("distribution")[1].at("k"), -1);
    EXPECT_EQ(doc.at("distribution")[1].at("p").get<double>(), dist.at(-1));
    EXPECT_NEAR(dist.at(-1), 0.625, 1e-15);
}

TEST(DistributionJson, round_trip_is_bit_exact) {
    Rng rng(81);
    for (int i = 0; i < 20; ++i) {
        const Coin coin = random_coin(rng);
        const Qubit phi = random_qubit(rng);
        const auto dist = distribution(evolve(phi, coin, 1 + i * 7));
        const auto back = io::parse_distribution_json(io::distribution_json(dist, coin, phi));
        ASSERT_EQ(back.n(), dist.n());
        for (int k = -dist.n(); k <= dist.n(); ++k) EXPECT_EQ(back.at(k), dist.at(k));
    }
}

TEST(DistributionJson, malformed_input) {
    EXPECT_THROW(io::parse_distribution_json("{"), ParseError);
    EXPECT_THROW(io::parse_distribution_json(R"({"n": 1})"), ParseError);
    EXPECT_THROW(io::parse_distribution_json(R"({"n": 1, "distribution": [{"k": 5, "p": 1}]})"), ParseError);
}

TEST(WriteFileAtomic, writes_and_replaces) {
    const fs::path dir = fs::temp_directory_path() / "qwalk_io_test";
    fs::create_directories(dir);
    const fs::path file = dir / "out.txt";
    io::write_file_atomic(file, "first");
    io::write_file_atomic(file, "second");
    std::ifstream in(file);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(text.str(), "second");
    for (const auto& entry : fs::directory_iterator(dir)) EXPECT_EQ(entry.path().filename(), "out.txt");
    fs::remove_all(dir);
    EXPECT_THROW(io::write_file_atomic(dir / "missing" / "x.txt", "data"), IoError);
}
