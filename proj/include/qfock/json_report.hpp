#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace qfock {

/// All CLI documents use insertion-ordered JSON so that identical arguments
/// produce byte-identical output. Arbitrary-precision values are rendered
/// as strings; structural integers stay numeric.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json qbinom_document(std::int64_t p, std::int64_t n, std::int64_t m, bool at_root);
Json weyl_document(std::int64_t p, std::int64_t m);
Json infmod_document(std::int64_t p, std::int64_t s, std::int64_t window);
Json classify_document(std::int64_t p, std::int64_t lambda);
Json verify_document(std::int64_t p, int which, std::int64_t bound, std::uint64_t seed);
Json selftest_document(std::uint64_t seed);

/// Human-readable rendering of any of the documents above.
std::string render_text(const Json& doc);

/// False exactly when the document reports a verification failure
/// (verify / selftest); used for the exit code.
bool document_passed(const Json& doc);

} // namespace qfock
