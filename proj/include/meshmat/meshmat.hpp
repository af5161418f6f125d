#pragma once

// Exact spectral toolkit for mesh matrices of graphs: fundamental-cycle Gram
// matrices relative to a spanning tree, their characteristic polynomials as
// spanning-tree counting polynomials, the mesh Laplacian with its Kirchhoff
// specialization via cones, lattice torsion orders, flux eigenvalue reports,
// and the torsion-weighted forest sums for CW complexes.

#include "meshmat/bigint.hpp"
#include "meshmat/chain.hpp"
#include "meshmat/charpoly.hpp"
#include "meshmat/combinations.hpp"
#include "meshmat/cw_complex.hpp"
#include "meshmat/cw_mesh.hpp"
#include "meshmat/errors.hpp"
#include "meshmat/exact_linalg.hpp"
#include "meshmat/flux.hpp"
#include "meshmat/io.hpp"
#include "meshmat/kirchhoff.hpp"
#include "meshmat/lattice.hpp"
#include "meshmat/matrix.hpp"
#include "meshmat/mesh_algebra.hpp"
#include "meshmat/mesh_context.hpp"
#include "meshmat/multigraph.hpp"
#include "meshmat/polynomial.hpp"
#include "meshmat/smith.hpp"
#include "meshmat/st_poly.hpp"
#include "meshmat/symmetric_eigen.hpp"
