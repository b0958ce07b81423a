#include "rankin/cache.hpp"
#include "rankin/errors.hpp"
#include "rankin/io.hpp"
#include "rankin/propagation.hpp"

#include <doctest.h>

#include <fstream>
#include <random>

using namespace rankin;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        std::random_device rd;
        path = fs::temp_directory_path() / ("rankin-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::shared_ptr<IntegralLattice const> shared(LinearCode const& code)
{
    return std::make_shared<IntegralLattice const>(construction_a(code));
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("radicals serialize as num/den/root")
{
    ExactRadical v = ExactRadical::make(243, 16, 5);
    Json j = radical_to_json(v, 4);
    CHECK(j["num"] == "243");
    CHECK(j["den"] == "16");
    CHECK(j["root"] == 5);
    CHECK(j["decimal"] == "1.723");
    CHECK(radical_from_json(j) == v);
    CHECK(display_decimal(ExactRadical(12), 6) == "12");
}

TEST_CASE("certificates round-trip and are re-verified")
{
    LinearCode code = parity_check_code(4, 2);
    auto L = shared(code);
    SearchCertificate cert = d_l_search(code, 2);
    Json doc = certificate_to_json(cert);
    SearchCertificate back = certificate_from_json(doc, L);
    CHECK(back.value == cert.value);
    CHECK(back.witness.rows == cert.witness.rows);
    CHECK(dump_json(certificate_to_json(back)) == dump_json(doc));

    Json wrong_value = doc;
    wrong_value["value"] = "2";
    CHECK_THROWS_AS(certificate_from_json(wrong_value, L), MismatchedCertificate);
    Json outside = doc;
    outside["witness"]["rows"][0] = {1, 0, 0, 0};
    CHECK_THROWS_AS(certificate_from_json(outside, L), MismatchedCertificate);
    Json degenerate = doc;
    degenerate["witness"]["rows"][1] = degenerate["witness"]["rows"][0];
    CHECK_THROWS_AS(certificate_from_json(degenerate, L), MismatchedCertificate);
    CHECK_THROWS_AS(certificate_from_json(Json::object(), L), ParseError);
}

TEST_CASE("bound tables export every cell")
{
    BoundTable t = propagate_bounds(5, default_seeds(5));
    Json j = bound_table_to_json(t, 6);
    CHECK(j["cells"].size() == t.intervals.size());
    CHECK(dump_json(Json::parse(dump_json(j))) == dump_json(j));
    std::string csv = bound_table_to_csv(t, 6);
    CHECK(csv.rfind("kind,n,l,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(t.intervals.size() + 1));
}

}

TEST_SUITE("cache") {

TEST_CASE("store then load gives the same certificate")
{
    TempDir dir;
    CertificateCache cache(dir.path);
    LinearCode code = reed_muller_code(1, 3);
    auto L = shared(code);
    CHECK_FALSE(cache.load(L, 2));
    SearchCertificate cert = d_l_search(code, 2);
    cache.store(*L, cert);
    std::string key = CertificateCache::key(*L, 2);
    CHECK(key.size() == 16);
    CHECK(fs::exists(cache.entry_path(key)));
    CHECK(cache.entry_path(key).parent_path().filename() == key.substr(0, 2));
    auto hit = cache.load(L, 2);
    REQUIRE(hit);
    CHECK(hit->value == cert.value);
    CHECK(hit->witness.rows == cert.witness.rows);
    CHECK(hit->candidates_examined == cert.candidates_examined);
    CHECK_FALSE(cache.load(L, 3));
}

TEST_CASE("keys separate lattices and ranks")
{
    auto a = construction_a(parity_check_code(4, 2));
    auto b = construction_a(parity_check_code(4, 3));
    CHECK(CertificateCache::key(a, 2) != CertificateCache::key(a, 3));
    CHECK(CertificateCache::key(a, 2) != CertificateCache::key(b, 2));
    CHECK(CertificateCache::key(a, 2) == CertificateCache::key(construction_a(parity_check_code(4, 2)), 2));
}

TEST_CASE("corrupt or forged entries are ignored with a warning")
{
    TempDir dir;
    CertificateCache cache(dir.path);
    std::vector<std::string> warnings;
    cache.set_warning_sink([&](std::string const& w) { warnings.push_back(w); });
    LinearCode code = parity_check_code(5, 2);
    auto L = shared(code);
    cache.store(*L, d_l_search(code, 2));
    fs::path entry = cache.entry_path(CertificateCache::key(*L, 2));

    std::ofstream(entry) << "{ not json";
    CHECK_FALSE(cache.load(L, 2));
    CHECK(warnings.size() == 1);

    SearchCertificate cert = d_l_search(code, 2);
    cache.store(*L, cert);
    std::ifstream in(entry);
    Json doc = Json::parse(in);
    in.close();
    doc["certificate"]["value"] = "1";
    std::ofstream(entry) << doc.dump();
    CHECK_FALSE(cache.load(L, 2));
    CHECK(warnings.size() == 2);

    // An entry copied under another lattice's key is rejected too.
    auto other = shared(parity_check_code(5, 3));
    fs::path other_entry = cache.entry_path(CertificateCache::key(*other, 2));
    fs::create_directories(other_entry.parent_path());
    cache.store(*L, cert);
    fs::copy_file(entry, other_entry, fs::copy_options::overwrite_existing);
    CHECK_FALSE(cache.load(other, 2));
    CHECK(warnings.size() == 3);
}

TEST_CASE("cache directory honours RANKIN_CACHE_DIR")
{
    ::setenv("RANKIN_CACHE_DIR", "/tmp/rankin-env-dir", 1);
    CHECK(CertificateCache::default_dir() == fs::path("/tmp/rankin-env-dir"));
    ::unsetenv("RANKIN_CACHE_DIR");
    ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
    CHECK(CertificateCache::default_dir() == fs::path("/tmp/xdg/rankin"));
}

}
