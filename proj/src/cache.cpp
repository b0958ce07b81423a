#include "rankin/cache.hpp"

#include "rankin/errors.hpp"
#include "rankin/io.hpp"
#include "rankin/version.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace rankin {

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::string const& text)
{
    for (unsigned char c : text) {
        h ^= c;
        h *= kFnvPrime;
    }
}

std::string canonical_text(IntegralLattice const& lattice, std::size_t l)
{
    std::string text = "l=" + std::to_string(l) + ";n=" + std::to_string(lattice.n()) + ";";
    for (auto const& row : lattice.basis()) {
        for (auto x : row)
            text += std::to_string(x) + ",";
        text += ";";
    }
    return text;
}

}  // namespace

CertificateCache::CertificateCache(fs::path dir) : dir_(std::move(dir))
{
    warn_ = [](std::string const& line) { std::cerr << "warning: " << line << "\n"; };
}

fs::path CertificateCache::default_dir()
{
    if (char const* env = std::getenv("RANKIN_CACHE_DIR"); env && *env)
        return env;
    if (char const* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "rankin";
    if (char const* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "rankin";
    return fs::temp_directory_path() / "rankin-cache";
}

std::string CertificateCache::key(IntegralLattice const& lattice, std::size_t l)
{
    std::uint64_t h = kFnvOffset;
    fnv_mix(h, canonical_text(lattice, l));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

fs::path CertificateCache::entry_path(std::string const& key) const
{
    return dir_ / key.substr(0, 2) / (key + ".json");
}

std::optional<SearchCertificate> CertificateCache::load(std::shared_ptr<IntegralLattice const> const& lattice,
                                                        std::size_t l) const
{
    std::string k = key(*lattice, l);
    fs::path path = entry_path(k);
    std::error_code ec;
    if (!fs::exists(path, ec))
        return std::nullopt;
    try {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        Json doc = Json::parse(buf.str());
        if (doc.at("key").get<std::string>() != k || doc.at("l").get<std::size_t>() != l)
            throw MismatchedCertificate("entry key does not match its contents");
        if (matrix_from_json(doc.at("basis"), "basis") != lattice->basis())
            throw MismatchedCertificate("entry was written for a different lattice");
        SearchCertificate cert = certificate_from_json(doc.at("certificate"), lattice);
        if (cert.l != l)
            throw MismatchedCertificate("certificate rank differs from the entry");
        return cert;
    } catch (std::exception const& e) {
        warn_("ignoring cache entry " + path.string() + ": " + e.what());
        return std::nullopt;
    }
}

void CertificateCache::store(IntegralLattice const& lattice, SearchCertificate const& cert) const
{
    std::string k = key(lattice, cert.l);
    fs::path path = entry_path(k);
    fs::create_directories(path.parent_path());
    Json doc = {{"key", k},
                {"l", cert.l},
                {"basis", matrix_to_json(lattice.basis())},
                {"certificate", certificate_to_json(cert)},
                {"tool_version", kVersion}};
    std::random_device rd;
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp);
        if (!out)
            throw Error("cannot write cache entry " + tmp.string());
        out << dump_json(doc);
        if (!out.flush())
            throw Error("cannot write cache entry " + tmp.string());
    }
    fs::rename(tmp, path);
}

}  // namespace rankin
