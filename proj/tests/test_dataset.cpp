#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "structnet/dataset.hpp"
#include "structnet/errors.hpp"

using namespace structnet;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

} // namespace

TEST_CASE("load_csv discrete target with first-appearance encoding") {
    auto path = write_temp("sn_load_discrete.csv", "a,b,label\n1,2,x\n3,4,y\n5,6,x\n");
    LoadedDataset d = load_csv(path, "label", TargetKind::Discrete);
    CHECK(d.features.sample_count() == 3);
    CHECK(d.features.feature_count() == 2);
    CHECK(d.features.feature_names == std::vector<std::string>{"a", "b"});
    CHECK(d.target.labels == std::vector<int>{0, 1, 0});
    CHECK(d.target.class_count == 2);
    CHECK(d.features.values(1, 0) == 3.0);
    CHECK(d.features.values(2, 1) == 6.0);
}

TEST_CASE("load_csv continuous target") {
    auto path = write_temp("sn_load_cont.csv",
                           "a,rate,b\n1,0.5,2\n3,1.5,4\n5,-2.25,6\n7,0.125,8\n");
    LoadedDataset d = load_csv(path, "rate", TargetKind::Continuous);
    CHECK(d.target.kind == TargetKind::Continuous);
    CHECK(d.target.continuous_values.size() == 4);
    CHECK(d.target.continuous_values.allFinite());
    CHECK(d.target.continuous_values[2] == -2.25);
    CHECK(d.features.feature_names == std::vector<std::string>{"a", "b"});
}

TEST_CASE("load_csv error paths") {
    SUBCASE("empty cell") {
        auto path = write_temp("sn_missing.csv", "a,b,label\n1,,x\n3,4,y\n");
        CHECK_THROWS_AS(load_csv(path, "label", TargetKind::Discrete), MissingValueError);
    }
    SUBCASE("unparsable cell") {
        auto path = write_temp("sn_unparse.csv", "a,b,label\n1,zap,x\n3,4,y\n");
        CHECK_THROWS_AS(load_csv(path, "label", TargetKind::Discrete), MissingValueError);
    }
    SUBCASE("non-finite cell") {
        auto path = write_temp("sn_inf.csv", "a,b,label\n1,inf,x\n3,4,y\n");
        CHECK_THROWS_AS(load_csv(path, "label", TargetKind::Discrete), MissingValueError);
    }
    SUBCASE("duplicate feature name") {
        auto path = write_temp("sn_dup.csv", "a,a,label\n1,2,x\n3,4,y\n");
        CHECK_THROWS_AS(load_csv(path, "label", TargetKind::Discrete),
                        DuplicateFeatureNameError);
    }
    SUBCASE("target not found") {
        auto path = write_temp("sn_notarget.csv", "a,b\n1,2\n3,4\n");
        CHECK_THROWS_AS(load_csv(path, "label", TargetKind::Discrete), TargetNotFoundError);
    }
    SUBCASE("too few samples") {
        auto path = write_temp("sn_short.csv", "a,b,label\n1,2,x\n");
        CHECK_THROWS_AS(load_csv(path, "label", TargetKind::Discrete), TooFewSamplesError);
    }
    SUBCASE("single class") {
        auto path = write_temp("sn_oneclass.csv", "a,b,label\n1,2,x\n3,4,x\n");
        CHECK_THROWS_AS(load_csv(path, "label", TargetKind::Discrete), Error);
    }
}

TEST_CASE("load_csv accepts a column index as target") {
    auto path = write_temp("sn_index.csv", "a,b,c\n1,2,3\n4,5,6\n");
    LoadedDataset d = load_csv(path, "2", TargetKind::Continuous);
    CHECK(d.features.feature_names == std::vector<std::string>{"a", "b"});
    CHECK(d.target.continuous_values[1] == 6.0);
}

TEST_CASE("load_csv handles quoted labels and CRLF") {
    auto path = write_temp("sn_quoted.csv", "a,label\r\n1,\"x,1\"\r\n2,\"y\"\r\n3,\"x,1\"\r\n");
    LoadedDataset d = load_csv(path, "label", TargetKind::Discrete);
    CHECK(d.target.labels == std::vector<int>{0, 1, 0});
}

TEST_CASE("standardize matches hand arithmetic on (1,2,3)") {
    FeatureMatrix m;
    m.values.resize(3, 1);
    m.values << 1.0, 2.0, 3.0;
    m.feature_names = {"x"};
    auto [out, record] = standardize(m);
    // mu = 2, sigma = sqrt(2/3)
    CHECK(record.means[0] == doctest::Approx(2.0));
    CHECK(record.std_devs[0] == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(out.values(0, 0) == doctest::Approx(-1.2247).epsilon(1e-4));
    CHECK(out.values(1, 0) == doctest::Approx(0.0));
    CHECK(out.values(2, 0) == doctest::Approx(1.2247).epsilon(1e-4));
    CHECK(record.applied);
}

TEST_CASE("standardize zeroes constant columns and flags them") {
    FeatureMatrix m;
    m.values.resize(3, 2);
    m.values << 5, 1, 5, 2, 5, 3;
    m.feature_names = {"const", "ramp"};
    auto [out, record] = standardize(m);
    CHECK(record.std_devs[0] == 0.0);
    CHECK(out.values.col(0).cwiseAbs().maxCoeff() == 0.0);
    CHECK(record.std_devs[1] > 0.0);
}

TEST_CASE("standardize is idempotent on non-constant columns") {
    std::mt19937 rng(7);
    std::normal_distribution<double> normal;
    FeatureMatrix m;
    m.values.resize(40, 3);
    for (Eigen::Index r = 0; r < 40; ++r)
        for (Eigen::Index c = 0; c < 3; ++c) m.values(r, c) = 3.0 * normal(rng) + 5.0;
    m.feature_names = {"a", "b", "c"};
    auto [once, r1] = standardize(m);
    auto [twice, r2] = standardize(once);
    CHECK((twice.values - once.values).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("write_csv / load_csv round-trips doubles bit-exactly") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    FeatureMatrix m;
    m.values.resize(5, 3);
    for (Eigen::Index r = 0; r < 5; ++r)
        for (Eigen::Index c = 0; c < 3; ++c)
            m.values(r, c) = std::ldexp(uniform(rng), static_cast<int>(rng() % 600) - 300);
    m.values(0, 0) = 0.1; // classic non-representable decimal
    m.values(1, 1) = 1.0 / 3.0;
    m.feature_names = {"a", "b", "c"};
    Target t;
    t.kind = TargetKind::Continuous;
    t.continuous_values.resize(5);
    for (Eigen::Index r = 0; r < 5; ++r) t.continuous_values[r] = uniform(rng);

    auto path = (std::filesystem::temp_directory_path() / "sn_roundtrip.csv").string();
    write_csv(path, m, t, "y");
    LoadedDataset d = load_csv(path, "y", TargetKind::Continuous);
    REQUIRE(d.features.values.rows() == 5);
    for (Eigen::Index r = 0; r < 5; ++r) {
        for (Eigen::Index c = 0; c < 3; ++c) CHECK(d.features.values(r, c) == m.values(r, c));
        CHECK(d.target.continuous_values[r] == t.continuous_values[r]);
    }
}

TEST_CASE("class_means examples") {
    Target t;
    t.kind = TargetKind::Discrete;
    t.class_count = 2;

    SUBCASE("two classes") {
        t.labels = {0, 0, 1, 1};
        Eigen::VectorXd f(4);
        f << 1, 3, 10, 14;
        Eigen::VectorXd mu = class_means(f, t);
        CHECK(mu[0] == 2.0);
        CHECK(mu[1] == 2.0);
        CHECK(mu[2] == 12.0);
        CHECK(mu[3] == 12.0);
    }
    SUBCASE("singleton classes") {
        t.labels = {0, 1};
        Eigen::VectorXd f(2);
        f << 1, 2;
        Eigen::VectorXd mu = class_means(f, t);
        CHECK(mu[0] == 1.0);
        CHECK(mu[1] == 2.0);
    }
    SUBCASE("constant feature") {
        t.labels = {0, 1, 0, 1};
        Eigen::VectorXd f = Eigen::VectorXd::Ones(4);
        Eigen::VectorXd mu = class_means(f, t);
        CHECK((mu.array() == 1.0).all());
    }
}

TEST_CASE("class_means output is constant within each class") {
    std::mt19937 rng(23);
    std::normal_distribution<double> normal;
    Target t;
    t.kind = TargetKind::Discrete;
    t.class_count = 3;
    Eigen::VectorXd f(30);
    for (Eigen::Index a = 0; a < 30; ++a) {
        f[a] = normal(rng);
        t.labels.push_back(static_cast<int>(a % 3));
    }
    Eigen::VectorXd mu = class_means(f, t);
    for (Eigen::Index a = 0; a < 30; ++a)
        for (Eigen::Index b = 0; b < 30; ++b)
            if (t.labels[a] == t.labels[b]) CHECK(mu[a] == mu[b]);
}
