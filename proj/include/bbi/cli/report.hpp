#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "bbi/embedding.hpp"
#include "bbi/seqengine.hpp"

namespace bbi::cli {

/// Field order is fixed so that serialized reports can be byte-compared.
nlohmann::ordered_json report_json(const std::string& target, const BitVec& y, std::size_t window,
                                   const InversionReport& r);
nlohmann::ordered_json report_json(const std::string& target, const BitVec& y, std::size_t window,
                                   const EmbeddingReport& r);

}  // namespace bbi::cli
