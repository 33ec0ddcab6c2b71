#pragma once

#include "lipnorm/lipfun.hpp"
#include "lipnorm/metric.hpp"

#include <initializer_list>

namespace testing_support {

inline lipnorm::Vector vec(std::initializer_list<const char*> items) {
    lipnorm::Vector out;
    for (const char* s : items) out.push_back(lipnorm::parse_rational(s));
    return out;
}

inline lipnorm::Rational q(const char* text) { return lipnorm::parse_rational(text); }

inline lipnorm::MetricSpace line(std::initializer_list<const char*> points) {
    return lipnorm::MetricSpace::on_line(vec(points));
}

inline lipnorm::LipFunction fn(const lipnorm::MetricSpace& space, std::initializer_list<const char*> values) {
    return lipnorm::LipFunction(space, vec(values));
}

}  // namespace testing_support
