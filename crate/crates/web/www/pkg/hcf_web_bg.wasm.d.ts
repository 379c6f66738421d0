/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const compare_series: (a: number, b: number, c: number) => [number, number];
export const delta_rows: (a: number, b: number, c: number) => [number, number];
export const e2_page: (a: number, b: number, c: number, d: number, e: number) => [number, number];
export const manifolds: () => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
