/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_cryptoview_free: (a: number, b: number) => void;
export const __wbg_get_cryptoview_cols: (a: number) => number;
export const __wbg_get_cryptoview_ks: (a: number) => number;
export const __wbg_get_cryptoview_mi_bits: (a: number) => number;
export const __wbg_get_cryptoview_rows: (a: number) => number;
export const __wbg_get_ratesview_p_t: (a: number) => number;
export const __wbg_get_ratesview_p_u: (a: number) => number;
export const __wbg_get_ratesview_penalty1: (a: number) => number;
export const __wbg_get_ratesview_penalty2: (a: number) => number;
export const __wbg_get_ratesview_r_comb_1: (a: number) => number;
export const __wbg_get_ratesview_r_comb_2: (a: number) => number;
export const __wbg_get_ratesview_ratio: (a: number) => number;
export const __wbg_get_ratesview_sigma_star_sq: (a: number) => number;
export const __wbg_ratesview_free: (a: number, b: number) => void;
export const __wbg_set_cryptoview_cols: (a: number, b: number) => void;
export const __wbg_set_cryptoview_ks: (a: number, b: number) => void;
export const __wbg_set_cryptoview_mi_bits: (a: number, b: number) => void;
export const __wbg_set_cryptoview_rows: (a: number, b: number) => void;
export const __wbg_set_ratesview_p_t: (a: number, b: number) => void;
export const __wbg_set_ratesview_p_u: (a: number, b: number) => void;
export const __wbg_set_ratesview_penalty1: (a: number, b: number) => void;
export const __wbg_set_ratesview_penalty2: (a: number, b: number) => void;
export const __wbg_set_ratesview_r_comb_1: (a: number, b: number) => void;
export const __wbg_set_ratesview_r_comb_2: (a: number, b: number) => void;
export const __wbg_set_ratesview_ratio: (a: number, b: number) => void;
export const __wbg_set_ratesview_sigma_star_sq: (a: number, b: number) => void;
export const crypto_histogram: (a: number, b: number, c: number, d: number) => [number, number, number];
export const cryptoview_freqs: (a: number) => [number, number];
export const rates_explorer: (a: number, b: number, c: number) => [number, number, number];
export const ratesview_best_a: (a: number) => [number, number];
export const ratesview_regime: (a: number) => [number, number];
export const sdof_curve: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const __wbg_get_ratesview_r1: (a: number) => number;
export const __wbg_get_ratesview_r2: (a: number) => number;
export const __wbg_set_ratesview_r1: (a: number, b: number) => void;
export const __wbg_set_ratesview_r2: (a: number, b: number) => void;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
