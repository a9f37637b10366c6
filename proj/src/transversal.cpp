#include "rloop/transversal.hpp"

#include <algorithm>
#include <ostream>

#include "rloop/errors.hpp"

namespace rloop {

namespace {

// coset index of every group element, under the right_cosets() ordering
std::vector<int> coset_index_map(const FiniteGroup& group,
                                 const std::vector<std::vector<int>>& cosets) {
  std::vector<int> index(static_cast<std::size_t>(group.order()), -1);
  for (std::size_t c = 0; c < cosets.size(); ++c)
    for (int x : cosets[c]) index[static_cast<std::size_t>(x)] = static_cast<int>(c);
  return index;
}

}  // namespace

Transversal transversal_from_elements(const FiniteGroup& group, const Subgroup& subgroup,
                                      std::span<const int> elements) {
  auto cosets = right_cosets(group, subgroup);
  auto coset_of = coset_index_map(group, cosets);
  std::vector<int> chosen(cosets.size(), -1);
  for (int x : elements) {
    if (x < 0 || x >= group.order())
      throw PreconditionFailed("transversal", "element index out of range");
    int c = coset_of[static_cast<std::size_t>(x)];
    if (chosen[static_cast<std::size_t>(c)] >= 0 && chosen[static_cast<std::size_t>(c)] != x)
      throw PreconditionFailed("transversal", "two elements chosen from the coset of '" +
                                                  group.name(x) + "'");
    chosen[static_cast<std::size_t>(c)] = x;
  }
  for (std::size_t c = 0; c < chosen.size(); ++c)
    if (chosen[c] < 0)
      throw PreconditionFailed("transversal",
                               "no element chosen from coset " + std::to_string(c));
  if (chosen[0] != group.identity())
    throw PreconditionFailed("transversal",
                             "not normalized: identity coset representative must be the identity");
  return Transversal{std::move(chosen)};
}

NrtEnumerator::NrtEnumerator(const FiniteGroup& group, const Subgroup& subgroup)
    : cosets_(right_cosets(group, subgroup)) {
  // the representative of the identity coset is forced; cosets_[0] is it
  if (cosets_.empty() || !std::binary_search(cosets_[0].begin(), cosets_[0].end(),
                                             group.identity()))
    throw Error("coset partition lost the identity coset");
  odometer_.assign(cosets_.size() > 1 ? cosets_.size() - 1 : 0, 0);
  total_ = BigInt::pow(static_cast<std::uint32_t>(subgroup.order()),
                       static_cast<unsigned>(odometer_.size()));
  identity_ = group.identity();
}

std::optional<Transversal> NrtEnumerator::next() {
  if (done_) return std::nullopt;
  Transversal out;
  out.chosen.reserve(cosets_.size());
  out.chosen.push_back(identity_);
  for (std::size_t i = 0; i < odometer_.size(); ++i)
    out.chosen.push_back(cosets_[i + 1][odometer_[i]]);

  // advance, last coset fastest
  done_ = true;
  for (std::size_t i = odometer_.size(); i-- > 0;) {
    if (++odometer_[i] < cosets_[i + 1].size()) {
      done_ = false;
      break;
    }
    odometer_[i] = 0;
  }
  if (odometer_.empty()) done_ = true;
  return out;
}

RightLoopTable induced_operation(const FiniteGroup& group, const Subgroup& subgroup,
                                 const Transversal& transversal) {
  auto cosets = right_cosets(group, subgroup);
  auto coset_of = coset_index_map(group, cosets);
  const std::vector<int>& s = transversal.chosen;
  int m = static_cast<int>(s.size());

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(m));
  for (int x : s) names.push_back(group.name(x));

  std::vector<int> entries(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int product = group.op(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
      entries[static_cast<std::size_t>(i) * m + j] = coset_of[static_cast<std::size_t>(product)];
    }
  return RightLoopTable(CayleyTable(std::move(names), std::move(entries)), 0);
}

CGroupoidData c_groupoid(const FiniteGroup& group, const Subgroup& subgroup,
                         const Transversal& transversal) {
  auto cosets = right_cosets(group, subgroup);
  auto coset_of = coset_index_map(group, cosets);
  CGroupoidData data;
  data.s_elements = transversal.chosen;
  data.h_elements = subgroup.members;

  int m = data.s_count();
  int k = data.h_count();
  std::vector<int> h_index(static_cast<std::size_t>(group.order()), -1);
  for (int i = 0; i < k; ++i)
    h_index[static_cast<std::size_t>(data.h_elements[static_cast<std::size_t>(i)])] = i;

  auto h_part = [&](int product, int rep) {
    // product = h * rep with h = product * rep^-1; membership in H is the
    // coset partition speaking, but verify anyway
    int h = group.op(product, group.inverse(rep));
    int idx = h_index[static_cast<std::size_t>(h)];
    if (idx < 0) throw Error("decomposition left the subgroup; coset partition is broken");
    return idx;
  };

  data.f.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int product = group.op(data.s_elements[static_cast<std::size_t>(i)],
                             data.s_elements[static_cast<std::size_t>(j)]);
      int rep = data.s_elements[static_cast<std::size_t>(
          coset_of[static_cast<std::size_t>(product)])];
      data.f[static_cast<std::size_t>(i) * m + j] = h_part(product, rep);
    }

  data.sigma.resize(static_cast<std::size_t>(m) * k);
  data.theta.resize(static_cast<std::size_t>(m) * k);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) {
      int product = group.op(data.s_elements[static_cast<std::size_t>(i)],
                             data.h_elements[static_cast<std::size_t>(j)]);
      int theta_coset = coset_of[static_cast<std::size_t>(product)];
      int rep = data.s_elements[static_cast<std::size_t>(theta_coset)];
      data.sigma[static_cast<std::size_t>(i) * k + j] = h_part(product, rep);
      data.theta[static_cast<std::size_t>(i) * k + j] = theta_coset;
    }

  // reconstruction identities, every pair
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int product = group.op(data.s_elements[static_cast<std::size_t>(i)],
                             data.s_elements[static_cast<std::size_t>(j)]);
      int h = data.h_elements[static_cast<std::size_t>(data.f_at(i, j))];
      int s = data.s_elements[static_cast<std::size_t>(
          coset_of[static_cast<std::size_t>(product)])];
      if (group.op(h, s) != product) throw Error("f reconstruction identity failed");
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) {
      int product = group.op(data.s_elements[static_cast<std::size_t>(i)],
                             data.h_elements[static_cast<std::size_t>(j)]);
      int h = data.h_elements[static_cast<std::size_t>(data.sigma_at(i, j))];
      int s = data.s_elements[static_cast<std::size_t>(data.theta_at(i, j))];
      if (group.op(h, s) != product) throw Error("sigma/theta reconstruction identity failed");
    }

  return data;
}

ThetaActionReport theta_action_check(const FiniteGroup& group, const CGroupoidData& data) {
  ThetaActionReport report;
  int m = data.s_count();
  int k = data.h_count();

  int identity_h = -1;
  for (int j = 0; j < k; ++j)
    if (data.h_elements[static_cast<std::size_t>(j)] == group.identity()) identity_h = j;
  if (identity_h < 0) throw Error("subgroup member list lacks the identity");

  std::vector<int> h_index(static_cast<std::size_t>(group.order()), -1);
  for (int j = 0; j < k; ++j)
    h_index[static_cast<std::size_t>(data.h_elements[static_cast<std::size_t>(j)])] = j;

  for (int x = 0; x < m; ++x) {
    if (data.theta_at(x, identity_h) != x)
      report.failures.push_back({x, identity_h, -1});
    for (int h1 = 0; h1 < k; ++h1)
      for (int h2 = 0; h2 < k; ++h2) {
        int lhs = data.theta_at(data.theta_at(x, h1), h2);
        int product = group.op(data.h_elements[static_cast<std::size_t>(h1)],
                               data.h_elements[static_cast<std::size_t>(h2)]);
        int rhs = data.theta_at(x, h_index[static_cast<std::size_t>(product)]);
        if (lhs != rhs) report.failures.push_back({x, h1, h2});
      }
  }
  return report;
}

void write_cgroupoid(std::ostream& out, const FiniteGroup& group, const CGroupoidData& data) {
  auto s_name = [&](int i) -> const std::string& {
    return group.name(data.s_elements[static_cast<std::size_t>(i)]);
  };
  auto h_name = [&](int j) -> const std::string& {
    return group.name(data.h_elements[static_cast<std::size_t>(j)]);
  };

  out << "f:\n";
  for (int i = 0; i < data.s_count(); ++i)
    for (int j = 0; j < data.s_count(); ++j)
      out << s_name(i) << " " << s_name(j) << " -> " << h_name(data.f_at(i, j)) << "\n";
  out << "sigma:\n";
  for (int i = 0; i < data.s_count(); ++i)
    for (int j = 0; j < data.h_count(); ++j)
      out << s_name(i) << " " << h_name(j) << " -> " << h_name(data.sigma_at(i, j)) << "\n";
  out << "theta:\n";
  for (int i = 0; i < data.s_count(); ++i)
    for (int j = 0; j < data.h_count(); ++j)
      out << s_name(i) << " " << h_name(j) << " -> " << s_name(data.theta_at(i, j)) << "\n";
}

}  // namespace rloop
