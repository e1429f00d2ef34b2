//! Builders for the algebra families of the corpus and the specialized
//! indicator formulas attached to them.

pub mod group;
pub mod groupoid;
pub mod table;
pub mod weak_hopf;

pub use group::{
    group_algebra, group_hopf, group_star_algebra, twisted_antipode, twisted_indicator, GroupAlgebra, GroupTable,
    Involution,
};
pub use groupoid::{drinfeld_double, groupoid_weak_hopf, GroupoidData};
pub use table::{table_algebra, table_indicator, table_raw_sum, TableAlgebra, TableAlgebraData};
pub use weak_hopf::{
    dual_hopf, haar_integral, hopf_separability_idempotent, twisted_product_element, twisted_weak_hopf_indicator,
    weak_hopf_indicator, WeakHopfData,
};
