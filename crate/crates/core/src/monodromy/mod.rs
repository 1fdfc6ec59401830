//! Braid monodromy of generic plane sections and the resulting group
//! presentations.

pub mod braid;
pub mod free_group;
pub mod garside;
pub mod invariants;
pub mod nilpotent;
pub mod presentation;
pub mod section;

pub use braid::BraidWord;
pub use free_group::{Automorphism, FreeWord};
pub use garside::{braids_equal, normal_form, NormalForm};
pub use invariants::{section_report, SectionReport};
pub use nilpotent::{check_against_census, nilpotent_relations, NilpotentRelations, Relation, RelationFamily};
pub use presentation::{presentation, smith_diagonal, Abelianization, Presentation};
pub use section::{
    braid_monodromy, build_section, random_section, section_lines, singular_points, total_monodromy,
    MonodromyBraid, Section, SectionLine, SectionPlane, SingularPoint,
};
