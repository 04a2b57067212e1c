use crate::dict::{DictionaryExpression, Expr};
use crate::error::Result;
use crate::streams::Lasso;
use crate::words::{Alphabet, Word};

/// Fixed-width binary letter code for an alphabet of size `n`: letter `m`
/// becomes its `p`-bit big-endian binary expansion, `p = min{p : n <= 2^p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    source: Alphabet,
    width: usize,
}

impl BinaryCode {
    pub fn new(source: Alphabet) -> Self {
        let n = source.size();
        let width = (1..).find(|&p| n <= 1usize << p).expect("some width fits");
        BinaryCode { source, width }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn letter(&self, m: u8) -> Word {
        Word::new((0..self.width).rev().map(|i| (m >> i) & 1).collect())
    }

    pub fn word(&self, w: &Word) -> Word {
        Word::new(w.letters().iter().flat_map(|&a| self.letter(a).into_letters()).collect())
    }

    pub fn lasso(&self, alpha: &Lasso) -> Lasso {
        alpha.map_letters(|a| self.letter(a))
    }

    fn expr(&self, e: &Expr) -> Expr {
        match e {
            Expr::Finite(set) => Expr::finite(set.iter().map(|w| self.word(w))),
            Expr::Ext(t) => Expr::Concat(vec![
                Expr::finite([self.word(t)]),
                Expr::star(Expr::finite(self.source.letters().map(|a| self.letter(a)))),
            ]),
            Expr::Letter(a) => Expr::finite([self.letter(*a)]),
            Expr::Epsilon => Expr::Epsilon,
            Expr::Concat(parts) => Expr::Concat(parts.iter().map(|p| self.expr(p)).collect()),
            Expr::Union(parts) => Expr::Union(parts.iter().map(|p| self.expr(p)).collect()),
            Expr::Star(a) => Expr::star(self.expr(a)),
            Expr::StarWords(a) => Expr::star_words(self.expr(a)),
            Expr::Diff(a, b) => Expr::diff(self.expr(a), self.expr(b)),
        }
    }

    /// The image dictionary over `{0, 1}`.
    pub fn dictionary(&self, d: &DictionaryExpression) -> Result<DictionaryExpression> {
        DictionaryExpression::binary(self.expr(d.expr()))
    }
}

/// Binary image of `d` together with the code used to transport lassos.
pub fn encode_binary(d: &DictionaryExpression) -> Result<(DictionaryExpression, BinaryCode)> {
    let code = BinaryCode::new(d.alphabet());
    Ok((code.dictionary(d)?, code))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::member_lasso;
    use crate::streams::lasso;
    use crate::words::w;

    #[test]
    fn letter_codes() {
        let c = BinaryCode::new(Alphabet::new(3).unwrap());
        assert_eq!(c.width(), 2);
        assert_eq!(c.letter(2), w("10"));
        assert_eq!(c.word(&w("02")), w("0010"));
        let id = BinaryCode::new(Alphabet::BINARY);
        assert_eq!(id.width(), 1);
        assert_eq!(id.word(&w("0110")), w("0110"));
        assert_eq!(BinaryCode::new(Alphabet::new(5).unwrap()).width(), 3);
    }

    #[test]
    fn membership_is_transported() {
        let three = Alphabet::new(3).unwrap();
        let d = DictionaryExpression::new(three, Expr::union(vec![Expr::Ext(w("2")), Expr::finite([w("01")])])).unwrap();
        let (b, code) = encode_binary(&d).unwrap();
        for l in ["(2)", "(01)", "2(10)", "0(1)", "(012)"] {
            let alpha = lasso(l);
            assert_eq!(member_lasso(&d, &alpha), member_lasso(&b, &code.lasso(&alpha)), "{l}");
        }
    }
}
