/* tslint:disable */
/* eslint-disable */

/**
 * Coefficients of both Poincaré series on `[0, hi]` and the first disagreement.
 */
export function compare_series(manifold: string, hi: number): string;

/**
 * `Δ` on every labelled class up to Hochschild degree `hdeg_max`,
 * computed on bar cochains and from the closed form.
 */
export function delta_rows(manifold: string, hdeg_max: number): string;

/**
 * Nonzero `E_2` entries with `q_lo <= q <= q_hi` and `p <= p_max`.
 */
export function e2_page(manifold: string, q_lo: number, q_hi: number, p_max: number): string;

/**
 * Names of the manifolds offered by the page.
 */
export function manifolds(): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly compare_series: (a: number, b: number, c: number) => [number, number];
    readonly delta_rows: (a: number, b: number, c: number) => [number, number];
    readonly e2_page: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly manifolds: () => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
