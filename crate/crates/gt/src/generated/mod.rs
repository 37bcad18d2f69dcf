//! Checked-in output of `gt gen decls/showcase.gt --with show,foldl,map`.
//! This index is the only hand-written file in the directory; a test
//! regenerates everything else and asserts byte equality.

pub mod arith_foldl_gen;
pub mod arith_gen;
pub mod arith_map_gen;
pub mod arith_show_gen;
pub mod expr_ext_foldl_gen;
pub mod expr_ext_gen;
pub mod expr_ext_map_gen;
pub mod expr_ext_show_gen;
pub mod expr_foldl_gen;
pub mod expr_gen;
pub mod expr_map_gen;
pub mod expr_show_gen;
pub mod forest_foldl_gen;
pub mod forest_gen;
pub mod forest_map_gen;
pub mod forest_show_gen;
pub mod lam_foldl_gen;
pub mod lam_gen;
pub mod lam_map_gen;
pub mod lam_show_gen;
pub mod neg_foldl_gen;
pub mod neg_gen;
pub mod neg_map_gen;
pub mod neg_show_gen;
pub mod pforest_foldl_gen;
pub mod pforest_gen;
pub mod pforest_map_gen;
pub mod pforest_show_gen;
pub mod ptree_foldl_gen;
pub mod ptree_gen;
pub mod ptree_map_gen;
pub mod ptree_show_gen;
pub mod t_foldl_gen;
pub mod t_gen;
pub mod t_map_gen;
pub mod t_show_gen;
pub mod tree_foldl_gen;
pub mod tree_gen;
pub mod tree_map_gen;
pub mod tree_show_gen;
pub mod var_foldl_gen;
pub mod var_gen;
pub mod var_map_gen;
pub mod var_show_gen;
