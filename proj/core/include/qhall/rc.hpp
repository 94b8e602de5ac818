#pragma once

#include "qhall/laurent.hpp"
#include "qhall/partition.hpp"

#include <functional>
#include <vector>

namespace qhall {

// Rectangle with `height` rows and `width` columns.
struct Rectangle {
    int height;
    int width;
};

using RectangleSequence = std::vector<Rectangle>;

int total_area(const RectangleSequence& R);

// Sequence of partitions nu^(1), nu^(2), ...; nu^(0) is empty.
struct Configuration {
    std::vector<Partition> nu;

    const Partition& level(std::size_t k) const;  // 1-based, empty beyond
};

// P_i^(k): widths of height-k rectangles capped at i, plus the discrete
// Laplacian of the Q_i row sums.
int vacancy(const Configuration& nu, const RectangleSequence& R, int k, int i);

// c({nu}) = sum_{k,i} C(A_ik, 2)
long cc(const Configuration& nu, const RectangleSequence& R);

// Admissible configurations: prescribed level sizes and nonnegative vacancy
// numbers.
void for_each_admissible_config(const Partition& la, const RectangleSequence& R,
                                const std::function<void(const Configuration&)>& fn);
std::vector<Configuration> admissible_configs(const Partition& la,
                                              const RectangleSequence& R);

LaurentPoly rc_poly(const Partition& la, const RectangleSequence& R);

// Multiplicity of la in the product of rectangle characters, by iterated
// Littlewood-Richardson expansion.
long tensor_multiplicity(const Partition& la, const RectangleSequence& R);

}  // namespace qhall
