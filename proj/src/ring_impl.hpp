#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg::detail {

class RingImpl {
 public:
  virtual ~RingImpl() = default;

  virtual std::uint32_t size() const = 0;
  virtual Element one() const = 0;
  virtual Element add(Element a, Element b) const = 0;
  virtual Element neg(Element a) const = 0;
  virtual Element mul(Element a, Element b) const = 0;

  virtual std::size_t coordinate_count() const = 0;
  virtual std::vector<std::uint64_t> decode(Element a) const = 0;
  virtual Element encode(std::span<const std::uint64_t> coords) const = 0;
  virtual std::string label(Element a) const = 0;

  virtual void annihilator(Element a, std::vector<Element>& out) const {
    annihilator_by_scan(a, out);
  }

  void annihilator_by_scan(Element a, std::vector<Element>& out) const {
    const std::uint32_t n = size();
    for (Element b = 0; b < n; ++b) {
      if (mul(a, b) == 0) out.push_back(b);
    }
  }
};

std::shared_ptr<const RingImpl> build_impl(const RingSpec& spec);

}  // namespace zdg::detail
