//! The worked examples, shared by the integration and acceptance targets.
#![allow(dead_code)]

use tgrs_core::twisted::w_vector;
use tgrs_core::{Elem, Field, TwistedSpec};

pub fn ints(f: &Field, xs: &[i64]) -> Vec<Elem> {
    xs.iter().map(|&x| f.from_int(x)).collect()
}

pub fn gf16() -> Field {
    Field::new(2, 4, None).unwrap()
}

/// TGRS_3 over GF(11), equivalent to several GRS codes.
pub fn grs_equivalent() -> TwistedSpec {
    let f = Field::prime(11).unwrap();
    TwistedSpec::with_unit_v(&f, ints(&f, &[0, 3, 4, 5, 9, 10]), Elem::ONE, 3, false).unwrap()
}

/// TGRS_3 over GF(13), MDS and not GRS.
pub fn non_grs_tgrs() -> TwistedSpec {
    let f = Field::prime(13).unwrap();
    TwistedSpec::with_unit_v(&f, ints(&f, &[2, 5, 7, 9, 10, 12]), Elem::ONE, 3, false).unwrap()
}

/// ETGRS_3 over GF(11) of length 6.
pub fn non_grs_etgrs() -> TwistedSpec {
    let f = Field::prime(11).unwrap();
    TwistedSpec::with_unit_v(&f, ints(&f, &[1, 5, 6, 9, 10]), f.from_int(3), 3, true).unwrap()
}

/// ETGRS_5 over GF(16) of length 12, the decoding example.
pub fn decoding_spec() -> TwistedSpec {
    let f = gf16();
    let points = f
        .parse_vector("1,w,w^12,w^2,w^13,w^14,w^4,w^5,w^6,w^7,w^9")
        .unwrap();
    TwistedSpec::with_unit_v(&f, points, f.parse("w^6").unwrap(), 5, true).unwrap()
}

pub fn received_word() -> Vec<Elem> {
    gf16()
        .parse_vector("w^13,w^10,w^2,w^10,w^5,w^6,w^7,w^2,w^5,w^4,0,1")
        .unwrap()
}

/// TGRS_3 over GF(13) with v = w and eta = 1; its dual is a Han-Zhang code.
pub fn han_zhang_spec() -> TwistedSpec {
    let f = Field::prime(13).unwrap();
    let points = ints(&f, &[2, 4, 5, 8, 9, 10]);
    let v = w_vector(&f, &points).unwrap();
    TwistedSpec::new(&f, points, v, Elem::ONE, 3, false).unwrap()
}
