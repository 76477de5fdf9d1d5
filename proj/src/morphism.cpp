#include "superdop/morphism.hpp"

#include "superdop/errors.hpp"

namespace superdop {

namespace {

void check_images(const Chart& source, const Chart& target, const std::vector<Superfunction>& images,
                  const char* what) {
  if (images.size() != source.dimension()) {
    throw IndexError(std::string(what) + ": expected " + std::to_string(source.dimension()) + " images, got " +
                     std::to_string(images.size()));
  }
  for (std::size_t k = 0; k < images.size(); ++k) {
    require_same_chart(images[k].chart(), target, what);
    const auto p = images[k].parity();
    if (!p || (!images[k].is_zero() && *p != source.parity(k))) {
      throw ParityError(std::string(what) + ": image of " + source.name(k) + " has the wrong parity");
    }
  }
}

}  // namespace

ChartMorphism::ChartMorphism(Chart source, Chart target, std::vector<Superfunction> images,
                             std::vector<Superfunction> inverse_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {
  if (source_.even_count() != target_.even_count() || source_.odd_count() != target_.odd_count()) {
    throw ChartMismatch("morphism: charts " + source_.dimension_string() + " and " + target_.dimension_string() +
                        " differ in dimension");
  }
  check_images(source_, target_, images_, "morphism");
  check_images(target_, source_, inverse_images_, "morphism inverse");
  for (std::size_t k = 0; k < source_.dimension(); ++k) {
    if (substitute(images_[k], source_, inverse_images_) != Superfunction::coordinate(source_, k)) {
      throw DomainError("morphism: supplied inverse does not undo the image of " + source_.name(k));
    }
  }
  for (std::size_t k = 0; k < target_.dimension(); ++k) {
    if (substitute(inverse_images_[k], target_, images_) != Superfunction::coordinate(target_, k)) {
      throw DomainError("morphism: supplied inverse does not undo the image of " + target_.name(k));
    }
  }
}

ChartMorphism ChartMorphism::identity(const Chart& chart) {
  std::vector<Superfunction> images;
  for (std::size_t k = 0; k < chart.dimension(); ++k) images.push_back(Superfunction::coordinate(chart, k));
  return ChartMorphism(chart, chart, images, images);
}

ChartMorphism ChartMorphism::inverse() const { return ChartMorphism(target_, source_, inverse_images_, images_); }

bool ChartMorphism::is_bundle_type() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    for (const auto& [index, c] : images_[k].terms()) {
      if (source_.is_odd(k) ? index.odd_degree() != 1 : index.odd != 0) return false;
    }
  }
  return true;
}

Superfunction ChartMorphism::pullback(const Superfunction& f) const {
  require_same_chart(f.chart(), source_, "pullback");
  return substitute(f, target_, images_);
}

Superfunction ChartMorphism::pullback_inverse(const Superfunction& g) const {
  require_same_chart(g.chart(), target_, "pullback");
  return substitute(g, source_, inverse_images_);
}

ChartMorphism compose(const ChartMorphism& phi, const ChartMorphism& psi) {
  require_same_chart(phi.source(), psi.target(), "morphism composition");
  std::vector<Superfunction> images;
  for (const auto& f : psi.images()) images.push_back(phi.pullback(f));
  std::vector<Superfunction> inverse_images;
  for (const auto& g : phi.inverse_images()) inverse_images.push_back(psi.pullback_inverse(g));
  return ChartMorphism(psi.source(), phi.target(), std::move(images), std::move(inverse_images));
}

Superfunction pullback(const ChartMorphism& phi, const Superfunction& f) { return phi.pullback(f); }

SuperDiffOp pushforward_op(const ChartMorphism& phi, const SuperDiffOp& d) {
  require_same_chart(d.chart(), phi.source(), "pushforward");
  if (d.is_zero()) return SuperDiffOp(phi.target());
  return extract_normal_form(phi.target(), d.order(), [&](const Superfunction& g) {
    return phi.pullback(apply(d, phi.pullback_inverse(g)));
  });
}

SuperVectorField pushforward_field(const ChartMorphism& phi, const SuperVectorField& x) {
  require_same_chart(x.chart(), phi.source(), "pushforward");
  std::vector<Superfunction> c;
  for (const auto& v : phi.inverse_images()) c.push_back(phi.pullback(x(v)));
  return SuperVectorField(phi.target(), std::move(c));
}

}  // namespace superdop
