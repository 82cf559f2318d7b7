#include "partition.hpp"

#include <string>

namespace unref {

Part triangular_number(Part n) { return n * (n + 1) / 2; }

DistinctPartition DistinctPartition::make(std::vector<Part> values) {
  if (values.empty()) fail(Status::Empty, "partition needs at least one part");
  std::sort(values.begin(), values.end());
  if (values.front() < 1)
    fail(Status::NonPositivePart,
         "part " + std::to_string(values.front()) + " is not positive");
  Part sum = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && values[i] == values[i - 1])
      fail(Status::DuplicatePart, "part " + std::to_string(values[i]) + " repeats");
    sum += values[i];
  }
  DistinctPartition p;
  p.parts_ = std::move(values);
  p.weight_ = sum;
  return p;
}

std::vector<Part> DistinctPartition::missing_parts() const {
  std::vector<Part> out;
  out.reserve(static_cast<std::size_t>(missing_count()));
  std::size_t idx = 0;
  for (Part v = 1; v <= largest(); ++v) {
    if (idx < parts_.size() && parts_[idx] == v) {
      ++idx;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

WeightDecomposition triangular_decompose(Part N) {
  if (N < 1) fail(Status::OutOfRange, "weight must be positive");
  Part n = 1;
  while (triangular_number(n) < N) ++n;
  return WeightDecomposition{n, triangular_number(n) - N, triangular_number(n)};
}

void enumerate_distinct(Part N, const PartFilter& filter, const PartVisitor& visit) {
  detail::enumerate_distinct_impl(N, filter, 1, N, visit);
}

void enumerate_distinct(Part N, const PartFilter& filter, Part first_min, Part first_max,
                        const PartVisitor& visit) {
  detail::enumerate_distinct_impl(N, filter, first_min, first_max, visit);
}

std::vector<DistinctPartition> collect_distinct(Part N, const PartFilter& filter) {
  std::vector<DistinctPartition> out;
  enumerate_distinct(N, filter, [&](std::span<const Part> parts) {
    out.push_back(DistinctPartition::make({parts.begin(), parts.end()}));
    return true;
  });
  return out;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "Ok";
    case Status::Empty: return "Empty";
    case Status::NonPositivePart: return "NonPositivePart";
    case Status::DuplicatePart: return "DuplicatePart";
    case Status::NoGaps: return "NoGaps";
    case Status::NoZColumn: return "NoZColumn";
    case Status::OutOfRange: return "OutOfRange";
    case Status::EmptyUniverse: return "EmptyUniverse";
    case Status::PatternCollision: return "PatternCollision";
    case Status::ExcludedEta: return "ExcludedEta";
    case Status::ConstraintViolation: return "ConstraintViolation";
    case Status::ShapeMismatch: return "ShapeMismatch";
    case Status::Unclassifiable: return "Unclassifiable";
    case Status::UnknownSuite: return "UnknownSuite";
    case Status::MalformedLine: return "MalformedLine";
    case Status::IoFailure: return "IoFailure";
    case Status::InvalidArgument: return "InvalidArgument";
    case Status::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

}  // namespace unref
