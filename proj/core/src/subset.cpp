#include "gammalab/subset.hpp"

#include "gammalab/error.hpp"

namespace gammalab {

std::vector<int> Subset::points() const {
  std::vector<int> out;
  for (unsigned m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

namespace {

std::string render(Subset s, char sep) {
  std::string out = "{";
  bool first = true;
  for (int p : s.points()) {
    if (!first) out += sep;
    out += std::to_string(p);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace

std::string to_string(Subset s) { return render(s, ','); }
std::string to_spaced_string(Subset s) { return render(s, ' '); }

std::string to_string(Recipe r) {
  switch (r) {
    case Recipe::GammaOpen: return "gamma-open";
    case Recipe::GammaClosed: return "gamma-closed";
    case Recipe::SemiOpen: return "semi-open";
    case Recipe::SemiClosed: return "semi-closed";
    case Recipe::Open: return "open";
    case Recipe::Custom: return "custom";
  }
  return "custom";
}

std::vector<Subset> SubsetFamily::members() const {
  std::vector<Subset> out;
  out.reserve(size());
  for_each([&](Subset s) { out.push_back(s); });
  return out;
}

std::string to_string(const SubsetFamily& f) {
  std::string out = "{";
  bool first = true;
  f.for_each([&](Subset s) {
    if (!first) out += ", ";
    out += to_string(s);
    first = false;
  });
  out += '}';
  return out;
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTopology: return "InvalidTopology";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::EmptySubspace: return "EmptySubspace";
    case ErrorCode::IncompleteOperationTable: return "IncompleteOperationTable";
    case ErrorCode::NotAnOperation: return "NotAnOperation";
    case ErrorCode::NotAnOpenSet: return "NotAnOpenSet";
    case ErrorCode::UnknownReference: return "UnknownReference";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::IncompleteMap: return "IncompleteMap";
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace gammalab
