#include "superschur/tensor_space.hpp"

#include <cctype>
#include <stdexcept>

namespace superschur {

TensorBasis::TensorBasis(const Dims &dims) : dims_(dims), size_(dims.tensor_dim()) {
  const int rank = dims.rank();
  const int d = dims.d();
  letters_.reserve(size_);
  std::vector<int> cur(static_cast<std::size_t>(d), 1);
  for (std::size_t pos = 0; pos < size_; ++pos) {
    letters_.push_back(cur);
    Weight occ = Weight::zero(static_cast<std::size_t>(rank));
    int par = 0;
    for (int x : cur) {
      occ[x] += 1;
      par += dims.parity(x);
    }
    occurrence_.push_back(std::move(occ));
    parity_.push_back(par % 2);
    // odometer increment, last letter fastest
    for (int t = d - 1; t >= 0; --t) {
      if (cur[static_cast<std::size_t>(t)] < rank) {
        ++cur[static_cast<std::size_t>(t)];
        break;
      }
      cur[static_cast<std::size_t>(t)] = 1;
    }
  }
}

std::size_t TensorBasis::position(const std::vector<int> &letters) const {
  if (letters.size() != static_cast<std::size_t>(dims_.d()))
    throw std::invalid_argument("tensor index has wrong length");
  std::size_t pos = 0;
  for (int x : letters) {
    if (!dims_.valid_index(x))
      throw std::invalid_argument("tensor letter out of range");
    pos = pos * static_cast<std::size_t>(dims_.rank()) + static_cast<std::size_t>(x - 1);
  }
  return pos;
}

std::string TensorBasis::label(std::size_t pos) const {
  std::string s;
  for (int x : letters(pos))
    s += std::to_string(x);
  return s.empty() ? "()" : s;
}

GeneratorTag GeneratorTag::parse(const std::string &s) {
  GeneratorTag g;
  std::string head;
  std::size_t k = 0;
  while (k < s.size() && std::isalpha(static_cast<unsigned char>(s[k])))
    head += s[k++];
  std::string digits;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
    digits += s[k++];
  std::string tail = s.substr(k);
  if (digits.empty() || digits.size() > 3)
    throw std::invalid_argument("bad generator tag '" + s + "'");
  g.index = std::stoi(digits);
  if (head == "e" && tail.empty())
    g.kind = Kind::e;
  else if (head == "f" && tail.empty())
    g.kind = Kind::f;
  else if (head == "H" && tail.empty())
    g.kind = Kind::H;
  else if (head == "E" && tail.empty())
    g.kind = Kind::E;
  else if (head == "F" && tail.empty())
    g.kind = Kind::F;
  else if (head == "K" && tail.empty())
    g.kind = Kind::K;
  else if ((head == "Kinv" && tail.empty()) || (head == "K" && tail == "^-1"))
    g.kind = Kind::Kinv;
  else
    throw std::invalid_argument("bad generator tag '" + s + "'");
  return g;
}

int GeneratorTag::grading(const Dims &dims) const {
  switch (kind) {
  case Kind::e:
  case Kind::f:
  case Kind::E:
  case Kind::F:
    return index == dims.m() ? 1 : 0;
  default:
    return 0;
  }
}

void GeneratorTag::validate(const Dims &dims) const {
  const bool cartan = kind == Kind::H || kind == Kind::K || kind == Kind::Kinv;
  const int hi = cartan ? dims.rank() : dims.rank() - 1;
  if (index < 1 || index > hi)
    throw std::invalid_argument("generator " + to_string() + " out of range for gl" + dims.to_string());
}

std::string GeneratorTag::to_string() const {
  switch (kind) {
  case Kind::e:
    return "e" + std::to_string(index);
  case Kind::f:
    return "f" + std::to_string(index);
  case Kind::H:
    return "H" + std::to_string(index);
  case Kind::E:
    return "E" + std::to_string(index);
  case Kind::F:
    return "F" + std::to_string(index);
  case Kind::K:
    return "K" + std::to_string(index);
  case Kind::Kinv:
    return "Kinv" + std::to_string(index);
  }
  return {};
}

std::vector<GeneratorTag> classical_generators(const Dims &dims) {
  std::vector<GeneratorTag> out;
  for (int i = 1; i < dims.rank(); ++i) {
    out.push_back({GeneratorTag::Kind::e, i});
    out.push_back({GeneratorTag::Kind::f, i});
  }
  for (int i = 1; i <= dims.rank(); ++i)
    out.push_back({GeneratorTag::Kind::H, i});
  return out;
}

std::vector<GeneratorTag> quantum_generators(const Dims &dims) {
  std::vector<GeneratorTag> out;
  for (int a = 1; a < dims.rank(); ++a) {
    out.push_back({GeneratorTag::Kind::E, a});
    out.push_back({GeneratorTag::Kind::F, a});
  }
  for (int a = 1; a <= dims.rank(); ++a) {
    out.push_back({GeneratorTag::Kind::K, a});
    out.push_back({GeneratorTag::Kind::Kinv, a});
  }
  return out;
}

} // namespace superschur
