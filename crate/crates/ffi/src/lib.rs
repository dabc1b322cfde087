//! C ABI over the fishburn crate: opaque handles for the three object
//! types, status codes, and string-returning accessors, so other
//! languages can bind without knowing the Rust layouts.
//!
//! Conventions: every function that can fail returns [`FbnStatus`] and
//! writes its result through an out pointer. On failure the out pointer
//! is left untouched and a message is stored for
//! [`fbn_last_error_message`]. Strings returned through out pointers
//! are heap-allocated and must be released with [`fbn_string_free`];
//! handles must be released with their matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::str::FromStr;

use fishburn::bijections::{
    flip, matrix_from_permutation, matrix_from_sequence, permutation_from_matrix,
    permutation_from_sequence, sequence_from_matrix, sequence_from_permutation,
};
use fishburn::oracle::fishburn_numbers;
use fishburn::patterns::contains_pattern;
use fishburn::statistics::{matrix_stats, modified_sequence, perm_stats, seq_stats};
use fishburn::verify::run_verification;
use fishburn::{AscentSequence, Error, FishburnMatrix, Permutation};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FbnStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A text argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input failed to parse or validate as the requested object.
    Parse = 3,
    /// The object is outside the domain of the operation, e.g. a
    /// permutation containing the pattern or a weight-1 matrix handed
    /// to removal.
    Domain = 4,
    /// A label, position, size, or buffer capacity was out of range.
    Range = 5,
}

/// Opaque handle around a validated permutation.
pub struct FbnPermutation(Permutation);

/// Opaque handle around a validated ascent sequence.
pub struct FbnSequence(AscentSequence);

/// Opaque handle around a validated Fishburn matrix.
pub struct FbnMatrix(FishburnMatrix);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> FbnStatus {
    match err {
        Error::BadToken { .. }
        | Error::Empty { .. }
        | Error::NotAPermutation { .. }
        | Error::NotAnAscentSequence { .. }
        | Error::NotAFishburnMatrix { .. }
        | Error::UnknownStatistic { .. }
        | Error::UnknownFamily { .. } => FbnStatus::Parse,
        Error::ContainsPattern { .. } | Error::NoPredecessor => FbnStatus::Domain,
        Error::LabelOutOfRange { .. }
        | Error::PositionOutOfRange { .. }
        | Error::BudgetExceeded { .. } => FbnStatus::Range,
    }
}

fn fail(err: Error) -> FbnStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

fn null_argument() -> FbnStatus {
    set_error("null pointer argument".to_string());
    FbnStatus::NullArgument
}

/// Message for the most recent failure on this thread, or null if no
/// call has failed yet. The pointer stays valid until the next failing
/// call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn fbn_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |c| c.as_ptr())
    })
}

/// Releases a string returned by any `_format`, `_json`, or `_number`
/// function.
///
/// # Safety
/// `s` must be a pointer previously returned through an out parameter
/// of this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn fbn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, FbnStatus> {
    if text.is_null() {
        return Err(null_argument());
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("input text is not valid UTF-8".to_string());
        FbnStatus::InvalidUtf8
    })
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> FbnStatus {
    if out.is_null() {
        return null_argument();
    }
    *out = Box::into_raw(Box::new(value));
    FbnStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> FbnStatus {
    if out.is_null() {
        return null_argument();
    }
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            FbnStatus::Ok
        }
        Err(_) => {
            set_error("output contained an interior NUL".to_string());
            FbnStatus::Parse
        }
    }
}

macro_rules! deref {
    ($ptr:expr) => {
        match $ptr.as_ref() {
            Some(handle) => &handle.0,
            None => return null_argument(),
        }
    };
}

/// Parses a permutation from space-separated one-line notation, e.g.
/// "8 5 2 3 1 6 4 7".
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fbn_perm_parse(
    text: *const c_char,
    out: *mut *mut FbnPermutation,
) -> FbnStatus {
    let s = match read_str(text) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match Permutation::from_str(s) {
        Ok(p) => write_out(out, FbnPermutation(p)),
        Err(e) => fail(e),
    }
}

/// Builds a permutation from an array of values 1..=len.
///
/// # Safety
/// `values` must point to `len` readable u32 values; `out` must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn fbn_perm_from_values(
    values: *const u32,
    len: usize,
    out: *mut *mut FbnPermutation,
) -> FbnStatus {
    if values.is_null() && len > 0 {
        return null_argument();
    }
    let elems: Vec<usize> = std::slice::from_raw_parts(values, len)
        .iter()
        .map(|&v| v as usize)
        .collect();
    match Permutation::new(elems) {
        Ok(p) => write_out(out, FbnPermutation(p)),
        Err(e) => fail(e),
    }
}

/// Number of entries, or 0 for null.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn fbn_perm_len(p: *const FbnPermutation) -> usize {
    p.as_ref().map_or(0, |h| h.0.len())
}

/// Copies the one-line notation into `buf`. Fails with Range when
/// `cap` is smaller than the length.
///
/// # Safety
/// `p` must be a live handle; `buf` must hold `cap` writable u32s.
#[no_mangle]
pub unsafe extern "C" fn fbn_perm_copy_values(
    p: *const FbnPermutation,
    buf: *mut u32,
    cap: usize,
) -> FbnStatus {
    let perm = deref!(p);
    if buf.is_null() {
        return null_argument();
    }
    if cap < perm.len() {
        set_error(format!("buffer holds {cap} values, need {}", perm.len()));
        return FbnStatus::Range;
    }
    for (i, &v) in perm.elems().iter().enumerate() {
        *buf.add(i) = v as u32;
    }
    FbnStatus::Ok
}

/// Renders the permutation as space-separated text.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid. Free the result
/// with `fbn_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fbn_perm_format(
    p: *const FbnPermutation,
    out: *mut *mut c_char,
) -> FbnStatus {
    let perm = deref!(p);
    write_string(out, perm.to_string())
}

/// True iff the permutation contains the forbidden pattern.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fbn_perm_contains_pattern(
    p: *const FbnPermutation,
    out: *mut bool,
) -> FbnStatus {
    let perm = deref!(p);
    if out.is_null() {
        return null_argument();
    }
    *out = contains_pattern(perm);
    FbnStatus::Ok
}

/// Every permutation statistic as a JSON object. Fails with Domain on
/// pattern-containing input.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid. Free the result
/// with `fbn_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fbn_perm_stats_json(
    p: *const FbnPermutation,
    out: *mut *mut c_char,
) -> FbnStatus {
    let perm = deref!(p);
    match perm_stats(perm) {
        Ok(stats) => {
            let json = serde_json::to_string(&stats).expect("stats serialize");
            write_string(out, json)
        }
        Err(e) => fail(e),
    }
}

/// # Safety
/// `p` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn fbn_perm_free(p: *mut FbnPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Parses an ascent sequence from space-separated text, e.g.
/// "0 1 1 0 2 1 0 3".
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fbn_seq_parse(
    text: *const c_char,
    out: *mut *mut FbnSequence,
) -> FbnStatus {
    let s = match read_str(text) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match AscentSequence::from_str(s) {
        Ok(x) => write_out(out, FbnSequence(x)),
        Err(e) => fail(e),
    }
}

/// Builds an ascent sequence from an array, validating the ascent
/// bound.
///
/// # Safety
/// `values` must point to `len` readable u32 values; `out` must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn fbn_seq_from_values(
    values: *const u32,
    len: usize,
    out: *mut *mut FbnSequence,
) -> FbnStatus {
    if values.is_null() && len > 0 {
        return null_argument();
    }
    let elems: Vec<usize> = std::slice::from_raw_parts(values, len)
        .iter()
        .map(|&v| v as usize)
        .collect();
    match AscentSequence::new(elems) {
        Ok(x) => write_out(out, FbnSequence(x)),
        Err(e) => fail(e),
    }
}

/// Number of entries, or 0 for null.
///
/// # Safety
/// `x` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn fbn_seq_len(x: *const FbnSequence) -> usize {
    x.as_ref().map_or(0, |h| h.0.len())
}

/// Copies the entries into `buf`. Fails with Range when `cap` is too
/// small.
///
/// # Safety
/// `x` must be a live handle; `buf` must hold `cap` writable u32s.
#[no_mangle]
pub unsafe extern "C" fn fbn_seq_copy_values(
    x: *const FbnSequence,
    buf: *mut u32,
    cap: usize,
) -> FbnStatus {
    let seq = deref!(x);
    if buf.is_null() {
        return null_argument();
    }
    if cap < seq.len() {
        set_error(format!("buffer holds {cap} values, need {}", seq.len()));
        return FbnStatus::Range;
    }
    for (i, &v) in seq.elems().iter().enumerate() {
        *buf.add(i) = v as u32;
    }
    FbnStatus::Ok
}

/// Renders the sequence as space-separated text.
///
/// # Safety
/// `x` must be a live handle; `out` must be valid. Free the result
/// with `fbn_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fbn_seq_format(x: *const FbnSequence, out: *mut *mut c_char) -> FbnStatus {
    let seq = deref!(x);
    write_string(out, seq.to_string())
}

/// Sequence statistics, the modified sequence, and its polynomial, as
/// a JSON object.
///
/// # Safety
/// `x` must be a live handle; `out` must be valid. Free the result
/// with `fbn_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fbn_seq_stats_json(
    x: *const FbnSequence,
    out: *mut *mut c_char,
) -> FbnStatus {
    let seq = deref!(x);
    let raw = seq_stats(seq.elems());
    let hat = modified_sequence(seq);
    let hat_stats = seq_stats(&hat);
    let json = serde_json::json!({
        "n": seq.len(),
        "asc": seq.asc(),
        "stats": raw,
        "modified": hat,
        "chi_modified": hat_stats.chi,
        "rmax_modified": hat_stats.rmax(),
    });
    write_string(out, json.to_string())
}

/// # Safety
/// `x` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn fbn_seq_free(x: *mut FbnSequence) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// Parses a matrix from semicolon-separated rows, e.g. "1 1; 0 1".
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fbn_matrix_parse(
    text: *const c_char,
    out: *mut *mut FbnMatrix,
) -> FbnStatus {
    let s = match read_str(text) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match FishburnMatrix::from_str(s) {
        Ok(m) => write_out(out, FbnMatrix(m)),
        Err(e) => fail(e),
    }
}

/// Builds a matrix from `dim * dim` row-major cells, validating the
/// Fishburn invariants.
///
/// # Safety
/// `cells` must point to `dim * dim` readable u64 values; `out` must
/// be valid.
#[no_mangle]
pub unsafe extern "C" fn fbn_matrix_from_cells(
    cells: *const u64,
    dim: usize,
    out: *mut *mut FbnMatrix,
) -> FbnStatus {
    if cells.is_null() && dim > 0 {
        return null_argument();
    }
    let flat = std::slice::from_raw_parts(cells, dim * dim);
    let grid: Vec<Vec<u64>> = (0..dim)
        .map(|i| flat[i * dim..(i + 1) * dim].to_vec())
        .collect();
    match FishburnMatrix::new(grid) {
        Ok(m) => write_out(out, FbnMatrix(m)),
        Err(e) => fail(e),
    }
}

/// Number of rows, or 0 for null.
///
/// # Safety
/// `m` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn fbn_matrix_dim(m: *const FbnMatrix) -> usize {
    m.as_ref().map_or(0, |h| h.0.dim())
}

/// Sum of all entries, or 0 for null.
///
/// # Safety
/// `m` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn fbn_matrix_weight(m: *const FbnMatrix) -> u64 {
    m.as_ref().map_or(0, |h| h.0.weight())
}

/// Copies the cells row-major into `buf`. Fails with Range when `cap`
/// is smaller than dim * dim.
///
/// # Safety
/// `m` must be a live handle; `buf` must hold `cap` writable u64s.
#[no_mangle]
pub unsafe extern "C" fn fbn_matrix_copy_cells(
    m: *const FbnMatrix,
    buf: *mut u64,
    cap: usize,
) -> FbnStatus {
    let matrix = deref!(m);
    if buf.is_null() {
        return null_argument();
    }
    let k = matrix.dim();
    if cap < k * k {
        set_error(format!("buffer holds {cap} cells, need {}", k * k));
        return FbnStatus::Range;
    }
    for i in 0..k {
        for j in 0..k {
            *buf.add(i * k + j) = matrix.entry(i, j);
        }
    }
    FbnStatus::Ok
}

/// Renders the matrix as semicolon-separated rows.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid. Free the result
/// with `fbn_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fbn_matrix_format(
    m: *const FbnMatrix,
    out: *mut *mut c_char,
) -> FbnStatus {
    let matrix = deref!(m);
    write_string(out, matrix.to_string())
}

/// Every matrix statistic as a JSON object.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid. Free the result
/// with `fbn_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fbn_matrix_stats_json(
    m: *const FbnMatrix,
    out: *mut *mut c_char,
) -> FbnStatus {
    let matrix = deref!(m);
    let stats = matrix_stats(matrix);
    let json = serde_json::json!({
        "weight": matrix.weight(),
        "stats": stats,
    });
    write_string(out, json.to_string())
}

/// # Safety
/// `m` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn fbn_matrix_free(m: *mut FbnMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Encodes an avoider as its ascent sequence. Fails with Domain when
/// the permutation contains the pattern.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fbn_map_perm_to_seq(
    p: *const FbnPermutation,
    out: *mut *mut FbnSequence,
) -> FbnStatus {
    let perm = deref!(p);
    match sequence_from_permutation(perm) {
        Ok(x) => write_out(out, FbnSequence(x)),
        Err(e) => fail(e),
    }
}

/// Decodes an ascent sequence to its avoider.
///
/// # Safety
/// `x` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fbn_map_seq_to_perm(
    x: *const FbnSequence,
    out: *mut *mut FbnPermutation,
) -> FbnStatus {
    let seq = deref!(x);
    write_out(out, FbnPermutation(permutation_from_sequence(seq)))
}

/// Builds the weight-n matrix of an ascent sequence.
///
/// # Safety
/// `x` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fbn_map_seq_to_matrix(
    x: *const FbnSequence,
    out: *mut *mut FbnMatrix,
) -> FbnStatus {
    let seq = deref!(x);
    write_out(out, FbnMatrix(matrix_from_sequence(seq)))
}

/// Recovers the ascent sequence of a matrix by repeated removal.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fbn_map_matrix_to_seq(
    m: *const FbnMatrix,
    out: *mut *mut FbnSequence,
) -> FbnStatus {
    let matrix = deref!(m);
    write_out(out, FbnSequence(sequence_from_matrix(matrix)))
}

/// Transposes along the North-East diagonal.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fbn_matrix_flip(
    m: *const FbnMatrix,
    out: *mut *mut FbnMatrix,
) -> FbnStatus {
    let matrix = deref!(m);
    write_out(out, FbnMatrix(flip(matrix)))
}

/// The composite map from avoiders to matrices (encode, build, flip).
/// Fails with Domain when the permutation contains the pattern.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fbn_map_perm_to_matrix(
    p: *const FbnPermutation,
    out: *mut *mut FbnMatrix,
) -> FbnStatus {
    let perm = deref!(p);
    match matrix_from_permutation(perm) {
        Ok(m) => write_out(out, FbnMatrix(m)),
        Err(e) => fail(e),
    }
}

/// Inverse of the composite map.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fbn_map_matrix_to_perm(
    m: *const FbnMatrix,
    out: *mut *mut FbnPermutation,
) -> FbnStatus {
    let matrix = deref!(m);
    write_out(out, FbnPermutation(permutation_from_matrix(matrix)))
}

/// The n-th Fishburn number as a decimal string (exact at any n).
///
/// # Safety
/// `out` must be valid. Free the result with `fbn_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fbn_fishburn_number(n: u32, out: *mut *mut c_char) -> FbnStatus {
    let values = fishburn_numbers(n as usize);
    write_string(out, values[n as usize].to_string())
}

/// Runs the verification harness up to `n_max` and returns the full
/// report as JSON; `out_pass` receives the overall verdict. Fails with
/// Range when `n_max` exceeds the harness cap.
///
/// # Safety
/// `out` and `out_pass` must be valid. Free the string with
/// `fbn_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fbn_verify_json(
    n_max: u32,
    out: *mut *mut c_char,
    out_pass: *mut bool,
) -> FbnStatus {
    if out_pass.is_null() {
        return null_argument();
    }
    match run_verification(n_max as usize) {
        Ok(report) => {
            *out_pass = report.passed();
            let json = serde_json::to_string(&report).expect("report serialize");
            write_string(out, json)
        }
        Err(e) => fail(e),
    }
}
