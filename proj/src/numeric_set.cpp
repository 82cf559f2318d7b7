#include "numeric_set.hpp"

#include <charconv>
#include <sstream>

namespace unref {

NumericalSet NumericalSet::from_gaps(std::vector<Part> gaps) {
  std::sort(gaps.begin(), gaps.end());
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] < 1)
      fail(Status::NonPositivePart, "gap " + std::to_string(gaps[i]) + " is not positive");
    if (i > 0 && gaps[i] == gaps[i - 1])
      fail(Status::DuplicatePart, "gap " + std::to_string(gaps[i]) + " repeats");
  }
  NumericalSet s;
  s.gaps_ = std::move(gaps);
  return s;
}

NumericalSet NumericalSet::from_partition(const DistinctPartition& p) {
  return from_gaps(p.parts());
}

Part NumericalSet::multiplicity() const {
  Part v = 1;
  for (Part g : gaps_) {
    if (g == v) ++v;
    else if (g > v) break;
  }
  return v;
}

std::vector<Part> NumericalSet::small_elements(Part bound) const {
  if (bound < 0) fail(Status::OutOfRange, "bound must be non-negative");
  std::vector<Part> out;
  std::size_t idx = 0;
  for (Part v = 0; v <= bound; ++v) {
    if (idx < gaps_.size() && gaps_[idx] == v) {
      ++idx;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

NumericalSet::ClosureResult NumericalSet::closure() const {
  const Part f = frobenius();
  const std::vector<Part> members = small_elements(f);
  for (std::size_t i = 1; i < members.size(); ++i) {  // skip 0
    for (std::size_t j = i; j < members.size(); ++j) {
      const Part sum = members[i] + members[j];
      if (sum > f) break;
      if (!contains(sum)) return ClosureResult{false, members[i], members[j]};
    }
  }
  return ClosureResult{};
}

DistinctPartition NumericalSet::to_partition() const {
  if (gaps_.empty()) fail(Status::NoGaps, "the full set has no associated partition");
  return DistinctPartition::make(gaps_);
}

NumericalSet NumericalSet::parse(const std::string& text) {
  std::vector<Part> members;
  bool arrow = false;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // trim spaces
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      fail(Status::InvalidArgument, "empty token in numerical set literal");
    tok = tok.substr(b, e - b + 1);
    if (tok == "->") {
      arrow = true;
      if (ss.peek() != EOF)
        fail(Status::InvalidArgument, "tokens after the arrow in numerical set literal");
      break;
    }
    Part v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      fail(Status::InvalidArgument, "bad token '" + tok + "' in numerical set literal");
    if (!members.empty() && v <= members.back())
      fail(Status::InvalidArgument, "members must be strictly increasing");
    members.push_back(v);
  }
  if (!arrow) fail(Status::InvalidArgument, "numerical set literal must end with '->'");
  if (members.empty() || members.front() != 0)
    fail(Status::InvalidArgument, "0 must be the first member");
  std::vector<Part> gaps;
  std::size_t idx = 0;
  for (Part v = 0; v <= members.back(); ++v) {
    if (idx < members.size() && members[idx] == v) ++idx;
    else gaps.push_back(v);
  }
  return from_gaps(std::move(gaps));
}

std::string NumericalSet::format() const {
  std::string out;
  for (Part v : small_elements(frobenius() + 1)) {
    out += std::to_string(v);
    out += ',';
  }
  out += "->";
  return out;
}

}  // namespace unref
