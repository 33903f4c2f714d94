//! `π(n)` together with the published labels, when the presentation has them.

use operad_core::algebra::SparseMatrix;
use operad_core::presentation::{PiMatrix, RelationModule};

use crate::aliases::AliasTable;
use crate::builtins::Loaded;
use crate::error::Result;

pub struct View {
    pub rm: RelationModule,
    pub pm: PiMatrix,
    pub aliases: Option<AliasTable>,
    /// `π(n)` in alias order with alias signs, or canonical if there are no
    /// aliases.
    pub matrix: SparseMatrix,
}

impl View {
    pub fn new(loaded: &Loaded, n: usize, use_aliases: bool) -> Result<View> {
        let rm = RelationModule::new(loaded.presentation())?;
        let pm = rm.assemble_pi(n);
        let aliases = if use_aliases { AliasTable::resolve(&rm, &pm, &loaded.file)? } else { None };
        let matrix = match &aliases {
            Some(t) => t.apply(&pm.matrix),
            None => pm.matrix.clone(),
        };
        Ok(View { rm, pm, aliases, matrix })
    }

    /// Position of canonical row `i` in `matrix`.
    pub fn row_view(&self, i: usize) -> usize {
        match &self.aliases {
            Some(t) => t.rows.iter().position(|r| r.0 == i).expect("alias table is a bijection"),
            None => i,
        }
    }

    pub fn col_view(&self, j: usize) -> usize {
        match &self.aliases {
            Some(t) => t.cols.iter().position(|c| c.0 == j).expect("alias table is a bijection"),
            None => j,
        }
    }
}
