/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const bipartite_matching: (a: number, b: number, c: number, d: number, e: number) => [number, number];
export const grid_sssp: (a: number, b: number, c: number, d: number, e: number) => [number, number];
export const pagerank_sweep: (a: number, b: number, c: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
