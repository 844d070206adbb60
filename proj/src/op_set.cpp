#include "onefold/op_set.hpp"

#include "onefold/bignat.hpp"

namespace onefold {

std::optional<OpSet> OpSet::parse(std::string_view name) {
  if (name == "a") return a();
  if (name == "am") return am();
  if (name == "ame") return ame();
  if (name == "ae") return ae();
  return std::nullopt;
}

std::string OpSet::name() const {
  std::string out = "a";
  if (contains(OpKind::Mul)) out += 'm';
  if (contains(OpKind::Pow)) out += 'e';
  return out;
}

bool parse_decimal(std::string_view text, BigNat& out) {
  if (text.empty()) return false;
  if (text.size() > 1 && text.front() == '0') return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return out.set_str(std::string(text), 10) == 0;
}

}  // namespace onefold
