/* tslint:disable */
/* eslint-disable */

/**
 * Lock-step matching on the standard engine against stage-free matching
 * on the hybrid engine.
 */
export function bipartite_matching(left: number, right: number, p: number, k: number, seed: number): string;

/**
 * Runs SSSP from `source` on a `width`×`height` grid split into `k`
 * partitions (row blocks if `blocks`, otherwise `id mod k`) with every
 * engine.
 */
export function grid_sssp(width: number, height: number, k: number, blocks: boolean, source: number): string;

/**
 * Incremental PageRank on an `n`-vertex power-law graph in `k` blocks for
 * tolerances 1e-2 down to 1e-6.
 */
export function pagerank_sweep(n: number, k: number, seed: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly bipartite_matching: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly grid_sssp: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly pagerank_sweep: (a: number, b: number, c: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
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
