/* tslint:disable */
/* eslint-disable */

export class CryptoView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Row-major joint frequencies summing to one.
     */
    readonly freqs: Float64Array;
    cols: number;
    ks: number;
    mi_bits: number;
    rows: number;
}

export class RatesView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    p_t: number;
    p_u: number;
    penalty1: number;
    penalty2: number;
    r1: number;
    r2: number;
    r_comb_1: number;
    r_comb_2: number;
    ratio: number;
    sigma_star_sq: number;
    readonly best_a: string;
    readonly regime: string;
}

/**
 * Joint histogram of message bins against the wrap with dithers removed.
 */
export function crypto_histogram(k: number, samples: number, seed: number, masked: boolean): CryptoView;

/**
 * Secure rates for symmetric direct gain 1 and cross gain `cross`.
 * A non-positive `gamma_sq` selects the default `1/(h21^2 p)`.
 */
export function rates_explorer(cross: number, p_db: number, gamma_sq: number): RatesView;

/**
 * Flattened rows `(log10 P, sum rate, r_comb_2, penalty, ratio)` for a
 * sweep at fixed regime ratio.
 */
export function sdof_curve(ratio: number, log10_lo: number, log10_hi: number, points: number, gamma_sq: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_cryptoview_free: (a: number, b: number) => void;
    readonly __wbg_get_cryptoview_cols: (a: number) => number;
    readonly __wbg_get_cryptoview_ks: (a: number) => number;
    readonly __wbg_get_cryptoview_mi_bits: (a: number) => number;
    readonly __wbg_get_cryptoview_rows: (a: number) => number;
    readonly __wbg_get_ratesview_p_t: (a: number) => number;
    readonly __wbg_get_ratesview_p_u: (a: number) => number;
    readonly __wbg_get_ratesview_penalty1: (a: number) => number;
    readonly __wbg_get_ratesview_penalty2: (a: number) => number;
    readonly __wbg_get_ratesview_r_comb_1: (a: number) => number;
    readonly __wbg_get_ratesview_r_comb_2: (a: number) => number;
    readonly __wbg_get_ratesview_ratio: (a: number) => number;
    readonly __wbg_get_ratesview_sigma_star_sq: (a: number) => number;
    readonly __wbg_ratesview_free: (a: number, b: number) => void;
    readonly __wbg_set_cryptoview_cols: (a: number, b: number) => void;
    readonly __wbg_set_cryptoview_ks: (a: number, b: number) => void;
    readonly __wbg_set_cryptoview_mi_bits: (a: number, b: number) => void;
    readonly __wbg_set_cryptoview_rows: (a: number, b: number) => void;
    readonly __wbg_set_ratesview_p_t: (a: number, b: number) => void;
    readonly __wbg_set_ratesview_p_u: (a: number, b: number) => void;
    readonly __wbg_set_ratesview_penalty1: (a: number, b: number) => void;
    readonly __wbg_set_ratesview_penalty2: (a: number, b: number) => void;
    readonly __wbg_set_ratesview_r_comb_1: (a: number, b: number) => void;
    readonly __wbg_set_ratesview_r_comb_2: (a: number, b: number) => void;
    readonly __wbg_set_ratesview_ratio: (a: number, b: number) => void;
    readonly __wbg_set_ratesview_sigma_star_sq: (a: number, b: number) => void;
    readonly crypto_histogram: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly cryptoview_freqs: (a: number) => [number, number];
    readonly rates_explorer: (a: number, b: number, c: number) => [number, number, number];
    readonly ratesview_best_a: (a: number) => [number, number];
    readonly ratesview_regime: (a: number) => [number, number];
    readonly sdof_curve: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly __wbg_get_ratesview_r1: (a: number) => number;
    readonly __wbg_get_ratesview_r2: (a: number) => number;
    readonly __wbg_set_ratesview_r1: (a: number, b: number) => void;
    readonly __wbg_set_ratesview_r2: (a: number, b: number) => void;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
