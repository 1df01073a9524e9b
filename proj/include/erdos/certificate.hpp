#pragma once

#include <string>

#include "erdos/construct_det.hpp"
#include "erdos/construct_rand.hpp"

namespace erdos {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Atomic write (temp file + rename) of UTF-8 text.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

Json interval_set_to_json(const IntervalSet& set);
IntervalSet interval_set_from_json(const Json& j);
IntervalSet load_interval_set(const std::string& path);

// Certificates are self-verifying: they hold the pattern, the sets, exact
// measures, and a digest of the verification that `verify` can reproduce.
Json make_lemma3_certificate(const Pattern& pattern, const Lemma3Plan& plan);
Json make_theorem4_certificate(const Pattern& pattern, const Theorem4Witness& witness);
Json make_lemma10_certificate(const Pattern& pattern, const Lemma10Stage& stage);
Json make_thm15_certificate(const Pattern& pattern, const Thm15Result& result);
Json make_thm14b_certificate(const Pattern& pattern, const Thm14bResult& result);

std::string certificate_created_at();
std::string dump_certificate(Json certificate);  // adds created_at; stable layout

}  // namespace erdos
