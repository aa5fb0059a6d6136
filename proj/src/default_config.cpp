// Bundled default campaign, kept in sync with configs/default.toml.
#include "hermite2d/harness.hpp"

namespace h2d::harness {

const std::string& default_config_text() {
    static const std::string text = R"cfg(
seed = 20260808
not_converged = "fail"
format = "json"

[suite.poly.h2d.routes]
tolerance = 1e-9
samples = 100
max_index = 12
radius = 2.0

[suite.poly.h2d.bound]
tolerance = 1e-12
mode = "abs"
samples = 200
max_index = 10
radius = 2.0

[suite.poly.gf2d]
tolerance = 1e-12
mode = "abs"
samples = 40
degree_cap = 30

[suite.ks.real.identity]
tolerance = 1e-7
draws = 50
dims = [1, 2, 3]
norm_cap = 0.3
max_degree = 30
shell_tol = 1e-8
quiet_shells = 3

[suite.ks.complex.identity]
tolerance = 1e-7
draws = 50
dims = [1, 2, 3]
norm_scale = 0.8
w_radius = 1.5
max_degree = 30
max_degrees = [130, 64, 30]
shell_tol = 5e-9
quiet_shells = 3

[suite.ks.complex.hermitian]
tolerance = 1e-7
draws = 20
dims = [1, 2, 3]
frobenius_cap = 0.5
w_radius = 1.5
max_degree = 32
max_degrees = [90, 48, 32]
shell_tol = 5e-9
quiet_shells = 3

[suite.ks.laguerre.equiv]
tolerance = 1e-10
draws = 50
dims = [1, 2, 3]
norm_scale = 0.8
w_radius = 1.5
max_degree = 30
max_degrees = [130, 64, 30]
shell_tol = 5e-9
quiet_shells = 3

[suite.ks.charlier.bilinear]
tolerance = 1e-6
degree_cap = 40

[suite.ks.lemma.real]
tolerance = 1e-9
draws = 10
dims = [1, 2, 3]
norm_cap = 0.25
max_degree = 40
shell_tol = 1e-12

[suite.ks.lemma.complex]
tolerance = 1e-9
draws = 10
dims = [1, 2, 3]
norm_scale = 0.3
max_degree = 40
shell_tol = 1e-12

[suite.ks.tail.decay]
tolerance = 1e-12
mode = "abs"
draws = 4
dims = [1, 2, 3]
top_degree = 16
norm_scale = 0.8
w_radius = 1.5

[suite.int.hermite.moment]
tolerance = 1e-8
mode = "abs"
max_n = 6
points = 60

[suite.int.h2d.moment]
tolerance = 1e-8
mode = "abs"
points = 50

[suite.int.circle]
tolerance = 1e-8
mode = "abs"
points = 256

[suite.int.normal.real]
tolerance = 1e-8
mode = "abs"
points = 48

[suite.int.normal.complex]
tolerance = 1e-8
mode = "abs"
points = 24

[suite.int.mixed]
tolerance = 1e-8
max_n = 8
points = 256

[suite.q.gf]
tolerance = 1e-10
mode = "abs"
degree_cap = 40

[suite.q.awi]
tolerance = 1e-8
mode = "abs"
points = 512

[suite.q.moments]
tolerance = 1e-10
mode = "abs"
max_j = 8
points = 512

[suite.q.bilinear]
tolerance = 1e-6
degree_cap = 24
points = 512

[suite.q.multilinear]
tolerance = 1e-5
degree_cap = 16
points = 512
)cfg";
    return text;
}

}  // namespace h2d::harness
