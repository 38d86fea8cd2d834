#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pemark {

enum class Errc {
  MalformedJson,
  TopLevelNotObject,
  DuplicateTopLevelKey,
  InvalidPermutation,
  ValueTooLarge,
  ItemsNotSortedOrNotDistinct,
  DuplicateItems,
  GroupSizeExceedsCapacity,
  NoCompleteGroups,
  DuplicateKeysInGroup,
  EmptyInput,
  LengthMismatch,
  IntensityOutOfRange,
  InvalidConfig,
  ConfigSyntax,
  UpstreamUnreachable,
  InvalidArgument,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pemark
