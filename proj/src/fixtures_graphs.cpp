// Blanuša graphs transcribed from their drawings.
#include "pebbling/families.hpp"

namespace pebbling::fixtures {

// Node letters of the drawing: A=z_3 B=z_4 C=x_3 D=x_4 E=x_3' F=x_4' G=x_2 H=x_5 I=x_1
// J=x_2' K=x_5' L=x_1' M=z_2 N=z_5 O=z_1 P=z_2' Q=z_5' R=z_1'.
// This labelling reproduces every per-target certificate of the B_2 tables.
extern const char* const kBlanusa2 = R"(graph blanusa-2
vertices z_3 z_4 x_3 x_4 x_3' x_4' x_2 x_5 x_1 x_2' x_5' x_1' z_2 z_5 z_1 z_2' z_5' z_1'
edge z_3 z_4
edge z_3 x_3
edge z_4 x_4
edge z_3 x_3'
edge z_4 x_4'
edge x_3 x_5
edge x_3 x_1
edge x_4 x_2
edge x_4 x_1
edge x_2 x_5
edge x_3' x_5'
edge x_3' x_1'
edge x_4' x_2'
edge x_4' x_1'
edge x_2' x_5'
edge x_2 z_2
edge x_5 z_5
edge x_1 z_1
edge x_2' z_2'
edge x_5' z_5'
edge x_1' z_1'
edge z_2 z_1
edge z_2 z_2'
edge z_5 z_1
edge z_5 z_5'
edge z_2' z_1'
edge z_5' z_1'
)";

// Drawing nodes A0..A17 in vertex order. A0..A16 form a 17-cycle and A17 is the hub.
// The drawing lists the edge A16-A0 twice; it is kept once.
extern const char* const kBlanusa1 = R"(graph blanusa-1
vertices a_1 b_1 c_1 b_2 c_2 d_1 e_1 d_2 e_2 e_2' d_2' e_1' d_1' c_2' b_2' c_1' b_1' a_1'
edge a_1 b_1
edge b_1 c_1
edge c_1 b_2
edge b_2 c_2
edge c_2 d_1
edge d_1 e_1
edge e_1 d_2
edge d_2 e_2
edge e_2 e_2'
edge e_2' d_2'
edge d_2' e_1'
edge e_1' d_1'
edge d_1' c_2'
edge c_2' b_2'
edge b_2' c_1'
edge c_1' b_1'
edge b_1' a_1
edge a_1 a_1'
edge a_1' b_2
edge a_1' b_2'
edge b_1 c_2'
edge b_1' c_2
edge c_1 d_2
edge c_1' d_2'
edge d_1 e_2'
edge d_1' e_2
edge e_1 e_1'
)";

} // namespace pebbling::fixtures
