#ifndef RANKIN_CACHE_HPP_
#define RANKIN_CACHE_HPP_

#include "rankin/denssub.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace rankin {

/* On-disk store of d_l certificates, one JSON document per entry at
 * <dir>/<first two hex digits>/<key>.json. Entries are re-verified against
 * the lattice on load; anything that fails is reported and ignored. */
class CertificateCache {
public:
    explicit CertificateCache(std::filesystem::path dir);

    /* $RANKIN_CACHE_DIR, else $XDG_CACHE_HOME/rankin, else ~/.cache/rankin. */
    static std::filesystem::path default_dir();

    /* 16 hex digits of FNV-1a over the HNF basis and l. */
    static std::string key(IntegralLattice const& lattice, std::size_t l);

    std::filesystem::path const& dir() const { return dir_; }
    std::filesystem::path entry_path(std::string const& key) const;

    std::optional<SearchCertificate> load(std::shared_ptr<IntegralLattice const> const& lattice, std::size_t l) const;
    /* Write to a temporary file, then rename over the entry. */
    void store(IntegralLattice const& lattice, SearchCertificate const& cert) const;

    /* Receives one line per ignored entry; stderr by default. */
    void set_warning_sink(std::function<void(std::string const&)> sink) { warn_ = std::move(sink); }

private:
    std::filesystem::path dir_;
    std::function<void(std::string const&)> warn_;
};

}  // namespace rankin

#endif  /* RANKIN_CACHE_HPP_ */
