#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "artin1/certify.hpp"

namespace artin1 {

// Cache-key component; bump when the certificate schema or engine changes.
inline constexpr const char* kArtifactVersion = "1";

// "CERTIFIED_21", "CERTIFIED_OTHER(20)", or "INCONSISTENT".
std::string verdict_string(const Certificate& cert);

// Fixed key order:
// {"p", "model":{"curve":{"a","b","j"}, "params":{"B_sign","c","twist_d"},
//  "a4_coeffs", "a6_coeffs"}, "fibers":[{"place","type","euler","split"}],
//  "counts":{"N1","N2"}, "traces":{"t1","t2"}, "eigen":{"plus_p","minus_p"},
//  "rho_fp", "rho_fp2", "artin_invariant", "verdict"}
// Coefficients are decimal strings, ascending by degree.
nlohmann::ordered_json cert_to_json(const Certificate& cert);

// Inverse of cert_to_json on its image: cert_from_json(cert_to_json(c)) == c.
Certificate cert_from_json(const nlohmann::json& j);

// cert_to_json rendered with 2-space indent plus trailing newline.
std::string cert_json_text(const Certificate& cert);

// One certificate per row; see csv_header() for the column set.
std::string csv_header();
std::string cert_csv_row(const Certificate& cert);

// Human-readable multi-line report.
std::string cert_text(const Certificate& cert);

// File name identifying (engine version, p, model parameters).
std::string cache_key(uint64_t p, const PencilProvenance& prov);

// Returns the stored bytes, or nullopt when absent/unreadable.
std::optional<std::string> cache_load(const std::string& dir, const std::string& key);

// Atomic write (temporary file + rename); creates the directory if needed.
void cache_store(const std::string& dir, const std::string& key, const std::string& bytes);

}  // namespace artin1
