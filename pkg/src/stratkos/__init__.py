"""stratkos: exact computations for graded quiver algebras.

Algebras are given by basis and structure constants over Q or GF(p);
the toolkit computes minimal graded resolutions, Ext algebras with Yoneda
products, Koszul-type decision procedures, standard-module stratifications
for linear orders, the order-enumeration algorithm, and finite EI category
constructions, all in exact arithmetic.
"""

from .algebra import Algebra
from .allorders import (all_traces_projective, classify_tensor,
                        cokernel_closure_check, enumerate_orders,
                        is_J_projective, is_ss_all_linear_orders,
                        is_ss_all_preorders, qh_cokernel_criterion)
from .covers import (dual_module, is_iso_to_projective_power, is_projective,
                     is_self_injective, projective_cover, reduce_module,
                     restrict_to_subalgebra, splitting_property_status,
                     syzygy, syzygy_tower)
from .eicat import (Biset, EICategory, EIQuiver, FiniteGroup, category_algebra,
                    ei_theorem_checks, free_ei_category, free_ei_cover,
                    has_ufp, is_gradable, regular_objects,
                    unfactorizable_morphisms)
from .field import GF, QQ, Field
from .homological import (DEFAULT_BOUND, ExtTable, Resolution, duality_check,
                          ext_dims, is_koszul_algebra, is_koszul_module,
                          is_quasi_koszul, is_quasi_koszul_algebra,
                          koszul_complex, minimal_resolution,
                          reduction_correspondence_check,
                          theorem_koszul_vs_quasi_check, yoneda_algebra,
                          yoneda_product)
from .linalg import Matrix, Subspace
from .module import (Module, ModuleMap, a0_module, direct_sum, hom_basis,
                     hom_dim, modules_isomorphic, projective_module,
                     regular_module, simple_module, vertex_heads_module)
from .quiver import Presentation, Quiver, build_from_presentation
from .stratification import (LinearOrder, StandardSystem, delta_filtration,
                             gamma_of_standards, is_generated_in_height,
                             is_linearly_filtered, is_properly_stratified,
                             is_standardly_stratified, relative_cover_and_syzygy,
                             standard_modules, theorem_ext_projectivity_check,
                             theorem_gamma_koszul_check)
from .tensoralg import (Bimodule, bimodule_tensor, degree_part_bimodule,
                        is_quadratic, tensor_algebra_recognition)

__version__ = "0.1.0"
