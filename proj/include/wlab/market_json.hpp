#pragma once

#include <stdexcept>
#include <string>

#include "wlab/market.hpp"

namespace wlab {

// Schema violations name the offending field in what().
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Market parse_market(const std::string& text);
Market load_market_file(const std::string& path);
std::string serialize_market(const Market& mkt);

}  // namespace wlab
