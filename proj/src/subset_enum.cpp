#include "sumcomp/subset_enum.hpp"

namespace sumcomp {

std::uint64_t for_each_subset_sum(const Partition& a, Value target, std::size_t from_index,
                                  const std::function<bool(const Partition&)>& visit) {
    std::uint64_t visits = 0;
    std::vector<Part> chosen;
    detail::enumerate_subset_sums(a.parts(), target, from_index, chosen,
                                  [&](const std::vector<Part>& parts) {
                                      ++visits;
                                      return visit(Partition(parts));
                                  });
    return visits;
}

std::vector<Partition> subset_sums(const Partition& a, Value target, std::size_t from_index) {
    std::vector<Partition> out;
    for_each_subset_sum(a, target, from_index, [&](const Partition& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace sumcomp
