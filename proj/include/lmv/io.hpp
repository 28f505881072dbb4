#pragma once

// Ideal files (JSON) and the content-addressed on-disk basis cache.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "lmv/error.hpp"
#include "lmv/groebner.hpp"
#include "lmv/ideal.hpp"
#include "lmv/text.hpp"

namespace lmv {

class IoError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kIdealFileVersion = 1;

inline std::string field_kind_name(FieldKind k) {
  switch (k) {
    case FieldKind::rationals: return "rationals";
    case FieldKind::prime_field: return "prime";
    case FieldKind::quadratic_extension: return "quadratic";
  }
  return "?";
}

/// On-disk form of an ideal. The pi mode is implied: field element over the
/// quadratic extension, a variable when "pi" is listed, absent otherwise.
struct IdealFile {
  int format_version = kIdealFileVersion;
  std::vector<std::string> variables;
  std::string order = "grevlex";
  FieldDescriptor field = FieldDescriptor::rationals();
  std::vector<std::string> generators;

  RingPtr ring() const {
    PiMode mode = PiMode::absent;
    if (field.kind == FieldKind::quadratic_extension)
      mode = PiMode::field_element;
    else if (std::find(variables.begin(), variables.end(), kPiName) != variables.end())
      mode = PiMode::variable;
    return make_ring_context(variables, MonomialOrder::parse(order), field, mode);
  }

  template <CoefficientField K>
  Ideal<K> ideal(const RingPtr& ring, GroebnerOptions options = {}) const {
    std::vector<Polynomial<K>> gens;
    for (const auto& g : generators) gens.push_back(parse_polynomial<K>(g, ring));
    return Ideal<K>(ring, std::move(gens), std::move(options));
  }

  template <CoefficientField K>
  static IdealFile from_polynomials(const RingPtr& ring, const std::vector<Polynomial<K>>& polys) {
    IdealFile f;
    f.variables = ring->variables();
    f.order = ring->order().name();
    f.field = ring->field();
    for (const auto& p : polys) f.generators.push_back(to_string(p));
    return f;
  }

  template <CoefficientField K>
  static IdealFile from_ideal(const Ideal<K>& ideal) {
    return from_polynomials(ideal.ring(), ideal.generators());
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json fj{{"kind", field_kind_name(field.kind)}};
    if (field.kind != FieldKind::rationals) fj["p"] = field.p;
    if (field.kind == FieldKind::quadratic_extension) fj["u"] = field.u;
    return {{"format_version", format_version},
            {"variables", variables},
            {"order", order},
            {"field", fj},
            {"generators", generators}};
  }

  std::string dump() const { return to_json().dump(2) + "\n"; }

  static IdealFile parse(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid ideal file: ") + e.what(), 0);
    }
    try {
      IdealFile f;
      f.format_version = j.at("format_version").get<int>();
      if (f.format_version != kIdealFileVersion)
        throw InvalidArgument("unsupported ideal file version " + std::to_string(f.format_version));
      f.variables = j.at("variables").get<std::vector<std::string>>();
      f.order = j.at("order").get<std::string>();
      const auto& fj = j.at("field");
      const auto kind = fj.at("kind").get<std::string>();
      if (kind == "rationals")
        f.field = FieldDescriptor::rationals();
      else if (kind == "prime")
        f.field = FieldDescriptor::prime_field(fj.at("p").get<std::uint64_t>());
      else if (kind == "quadratic")
        f.field = FieldDescriptor::quadratic_extension(fj.at("p").get<std::uint64_t>(),
                                                       fj.at("u").get<std::uint64_t>());
      else
        throw InvalidArgument("unknown field kind '" + kind + "'");
      f.generators = j.at("generators").get<std::vector<std::string>>();
      return f;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid ideal file: ") + e.what(), 0);
    }
  }

  static IdealFile load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }
};

/// Calls `f.template operator()<K>()` with K the coefficient type of `field`.
template <class F>
decltype(auto) dispatch_field(const FieldDescriptor& field, F&& f) {
  switch (field.kind) {
    case FieldKind::rationals: return f.template operator()<Rational>();
    case FieldKind::prime_field: return f.template operator()<ModP>();
    case FieldKind::quadratic_extension: return f.template operator()<QuadraticNumber>();
  }
  throw InvalidArgument("unknown field kind");
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

/// One file per key, named by the key's hash. Entries record the engine
/// version, the full key and a payload checksum; anything that fails to
/// validate is deleted and reported as a miss.
class DiskBasisStore : public BasisStore {
 public:
  explicit DiskBasisStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create cache directory '" + dir_.string() + "': " + ec.message());
  }

  const std::filesystem::path& directory() const { return dir_; }

  std::filesystem::path entry_path(const std::string& key) const { return dir_ / (hex64(fnv1a64(key)) + ".gb.json"); }

  std::optional<std::vector<std::string>> load(const std::string& key) override {
    const auto path = entry_path(key);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    in.close();
    try {
      const auto j = nlohmann::json::parse(buf.str());
      if (j.at("engine").get<std::string>() != kEngineVersion) return evict(path);
      if (j.at("key").get<std::string>() != key) return std::nullopt;  // hash collision: leave the other entry
      auto basis = j.at("basis").get<std::vector<std::string>>();
      if (j.at("checksum").get<std::string>() != checksum(basis)) return evict(path);
      ++hits_;
      return basis;
    } catch (const nlohmann::json::exception&) {
      return evict(path);
    }
  }

  void save(const std::string& key, const std::vector<std::string>& basis) override {
    const nlohmann::ordered_json j{
        {"engine", kEngineVersion}, {"key", key}, {"basis", basis}, {"checksum", checksum(basis)}};
    const auto path = entry_path(key);
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << j.dump() << "\n";
      if (!out) return;  // a cache that cannot be written is only slower
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

  std::size_t hits() const { return hits_; }
  std::size_t evictions() const { return evictions_; }

 private:
  static std::string checksum(const std::vector<std::string>& basis) {
    std::string joined;
    for (const auto& b : basis) joined += b + "\n";
    return hex64(fnv1a64(joined));
  }

  std::optional<std::vector<std::string>> evict(const std::filesystem::path& path) {
    std::error_code ec;
    std::filesystem::remove(path, ec);
    ++evictions_;
    return std::nullopt;
  }

  std::filesystem::path dir_;
  std::size_t hits_ = 0;
  std::size_t evictions_ = 0;
};

/// Reduced basis via the store when given, else computed directly.
template <CoefficientField K>
std::vector<Polynomial<K>> cache_lookup_or_compute(const Ideal<K>& ideal, const std::shared_ptr<BasisStore>& store) {
  GroebnerOptions options = ideal.options();
  options.store = store;
  return Ideal<K>(ideal.ring(), ideal.generators(), std::move(options)).groebner_basis();
}

/// A directory removed with everything in it when the object dies.
class TempDirectory {
 public:
  TempDirectory() {
    std::string templ = (std::filesystem::temp_directory_path() / "lmv-cache-XXXXXX").string();
    if (::mkdtemp(templ.data()) == nullptr) throw IoError("cannot create temporary cache directory");
    path_ = templ;
  }
  TempDirectory(const TempDirectory&) = delete;
  TempDirectory& operator=(const TempDirectory&) = delete;
  ~TempDirectory() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace lmv
