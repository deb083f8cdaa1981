#ifndef CHAINRING_JSON_IO_HPP
#define CHAINRING_JSON_IO_HPP

#include <json.hpp>

#include "chainring/codes.hpp"

namespace chainring {

using json = nlohmann::ordered_json;

json to_json(const IdealSpec& spec);
IdealSpec ideal_from_json(const json& j, uint32_t p);

/// {p, s, k, n, w, variant, components: [...]}
json to_json(const Context& ctx, const CodeSpec& code);
CodeSpec code_from_json(const json& j, const Context& ctx);

json context_to_json(const Context& ctx);

}  // namespace chainring

#endif
