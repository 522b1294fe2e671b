#include "pargue/beta_prop.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pargue/error.hpp"
#include "pargue/semiring.hpp"

namespace pargue {

void CovarianceSpec::set(const std::string& a, const std::string& b, double value) {
  if (a == b) throw InputError("covariance diagonal is derived from the labels");
  if (!std::isfinite(value)) throw InputError("covariance entries must be finite");
  entries_[std::minmax(a, b)] = value;
}

double CovarianceSpec::get(std::string_view a, std::string_view b) const {
  std::pair<std::string, std::string> key{std::string(std::min(a, b)), std::string(std::max(a, b))};
  auto it = entries_.find(key);
  return it == entries_.end() ? 0.0 : it->second;
}

namespace {

std::vector<double> leaf_means(const Circuit& c, const BetaLabels& labels) {
  std::vector<double> means;
  for (const auto& v : c.variables()) {
    auto it = labels.find(v);
    if (it == labels.end()) throw InputError("missing beta label for '" + v + "'");
    means.push_back(it->second.mean());
  }
  return means;
}

std::vector<double> forward(const Circuit& c, const std::vector<double>& means) {
  std::vector<double> value(c.size());
  for (NodeId id = 0; id < c.size(); ++id) {
    const CircuitNode& n = c.node(id);
    switch (n.kind) {
      case NodeKind::True: value[id] = 1.0; break;
      case NodeKind::False: value[id] = 0.0; break;
      case NodeKind::Literal: {
        const double mu = means[n.literal.var];
        value[id] = n.literal.positive ? mu : 1.0 - mu;
        break;
      }
      case NodeKind::Or: {
        double acc = 0.0;
        for (NodeId ch : n.children) acc += value[ch];
        value[id] = acc;
        break;
      }
      case NodeKind::And: {
        double acc = 1.0;
        for (NodeId ch : n.children) acc *= value[ch];
        value[id] = acc;
        break;
      }
    }
  }
  return value;
}

}  // namespace

double eval_mean(const Circuit& c, const BetaLabels& labels) {
  return forward(c, leaf_means(c, labels))[c.root()];
}

std::vector<double> gradients(const Circuit& c, const BetaLabels& labels) {
  const std::vector<double> value = forward(c, leaf_means(c, labels));
  std::vector<double> adjoint(c.size(), 0.0);
  std::vector<double> grad(c.variable_count(), 0.0);
  adjoint[c.root()] = 1.0;
  for (NodeId id = static_cast<NodeId>(c.size()); id-- > 0;) {
    const double adj = adjoint[id];
    if (adj == 0.0) continue;
    const CircuitNode& n = c.node(id);
    switch (n.kind) {
      case NodeKind::True:
      case NodeKind::False: break;
      case NodeKind::Literal:
        grad[n.literal.var] += n.literal.positive ? adj : -adj;
        break;
      case NodeKind::Or:
        for (NodeId ch : n.children) adjoint[ch] += adj;
        break;
      case NodeKind::And: {
        // Product of siblings via prefix/suffix products, safe with zeros.
        const std::size_t k = n.children.size();
        std::vector<double> suffix(k + 1, 1.0);
        for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * value[n.children[i]];
        double prefix = 1.0;
        for (std::size_t i = 0; i < k; ++i) {
          adjoint[n.children[i]] += adj * prefix * suffix[i + 1];
          prefix *= value[n.children[i]];
        }
        break;
      }
    }
  }
  return grad;
}

Estimate propagate(const Circuit& c, const BetaLabels& labels, const CovarianceSpec* covariance,
                   const LabelConfig& config) {
  Estimate out;
  const std::vector<double> g = gradients(c, labels);
  const auto& vars = c.variables();
  std::vector<double> var(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) var[i] = labels.find(vars[i])->second.variance();

  double variance = 0.0;
  for (std::size_t i = 0; i < vars.size(); ++i) variance += g[i] * g[i] * var[i];

  if (covariance) {
    for (const auto& [key, cov] : covariance->entries()) {
      const auto ia = std::find(vars.begin(), vars.end(), key.first);
      const auto ib = std::find(vars.begin(), vars.end(), key.second);
      if (ia == vars.end() || ib == vars.end()) {
        throw InputError("covariance names unknown argument '" +
                         (ia == vars.end() ? key.first : key.second) + "'");
      }
      const auto a = static_cast<std::size_t>(ia - vars.begin());
      const auto b = static_cast<std::size_t>(ib - vars.begin());
      if (std::abs(cov) > std::sqrt(var[a] * var[b]) * (1.0 + 1e-12)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "covariance (%s, %s) = %g exceeds the Cauchy-Schwarz bound %g",
                      key.first.c_str(), key.second.c_str(), cov, std::sqrt(var[a] * var[b]));
        out.warnings.emplace_back(buf);
      }
      variance += 2.0 * g[a] * g[b] * cov;
    }
  }

  double mean = eval_mean(c, labels);
  // Rounding can push a probability a few ulps past its range.
  mean = std::clamp(mean, 0.0, 1.0);
  if (variance < 0.0) {
    out.warnings.emplace_back("propagated variance was negative (indefinite covariance); clamped to 0");
    variance = 0.0;
  }
  out.moments = {mean, variance};
  out.label = moment_match(out.moments);
  out.fuzzy = to_fuzzy(out.label, config);
  return out;
}

}  // namespace pargue
