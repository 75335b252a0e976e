/* @ts-self-types="./latsec_wasm.d.ts" */

export class CryptoView {
    static __wrap(ptr) {
        const obj = Object.create(CryptoView.prototype);
        obj.__wbg_ptr = ptr;
        CryptoViewFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        CryptoViewFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_cryptoview_free(ptr, 0);
    }
    /**
     * Row-major joint frequencies summing to one.
     * @returns {Float64Array}
     */
    get freqs() {
        const ret = wasm.cryptoview_freqs(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {number}
     */
    get cols() {
        const ret = wasm.__wbg_get_cryptoview_cols(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get ks() {
        const ret = wasm.__wbg_get_cryptoview_ks(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get mi_bits() {
        const ret = wasm.__wbg_get_cryptoview_mi_bits(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get rows() {
        const ret = wasm.__wbg_get_cryptoview_rows(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @param {number} arg0
     */
    set cols(arg0) {
        wasm.__wbg_set_cryptoview_cols(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set ks(arg0) {
        wasm.__wbg_set_cryptoview_ks(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set mi_bits(arg0) {
        wasm.__wbg_set_cryptoview_mi_bits(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set rows(arg0) {
        wasm.__wbg_set_cryptoview_rows(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) CryptoView.prototype[Symbol.dispose] = CryptoView.prototype.free;

export class RatesView {
    static __wrap(ptr) {
        const obj = Object.create(RatesView.prototype);
        obj.__wbg_ptr = ptr;
        RatesViewFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        RatesViewFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_ratesview_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get p_t() {
        const ret = wasm.__wbg_get_ratesview_p_t(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get p_u() {
        const ret = wasm.__wbg_get_ratesview_p_u(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get penalty1() {
        const ret = wasm.__wbg_get_ratesview_penalty1(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get penalty2() {
        const ret = wasm.__wbg_get_ratesview_penalty2(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get r1() {
        const ret = wasm.__wbg_get_ratesview_r1(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get r2() {
        const ret = wasm.__wbg_get_ratesview_r2(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get r_comb_1() {
        const ret = wasm.__wbg_get_ratesview_r_comb_1(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get r_comb_2() {
        const ret = wasm.__wbg_get_ratesview_r_comb_2(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get ratio() {
        const ret = wasm.__wbg_get_ratesview_ratio(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get sigma_star_sq() {
        const ret = wasm.__wbg_get_ratesview_sigma_star_sq(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {string}
     */
    get best_a() {
        let deferred1_0;
        let deferred1_1;
        try {
            const ret = wasm.ratesview_best_a(this.__wbg_ptr);
            deferred1_0 = ret[0];
            deferred1_1 = ret[1];
            return getStringFromWasm0(ret[0], ret[1]);
        } finally {
            wasm.__wbindgen_free(deferred1_0, deferred1_1, 1);
        }
    }
    /**
     * @returns {string}
     */
    get regime() {
        let deferred1_0;
        let deferred1_1;
        try {
            const ret = wasm.ratesview_regime(this.__wbg_ptr);
            deferred1_0 = ret[0];
            deferred1_1 = ret[1];
            return getStringFromWasm0(ret[0], ret[1]);
        } finally {
            wasm.__wbindgen_free(deferred1_0, deferred1_1, 1);
        }
    }
    /**
     * @param {number} arg0
     */
    set p_t(arg0) {
        wasm.__wbg_set_ratesview_p_t(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set p_u(arg0) {
        wasm.__wbg_set_ratesview_p_u(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set penalty1(arg0) {
        wasm.__wbg_set_ratesview_penalty1(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set penalty2(arg0) {
        wasm.__wbg_set_ratesview_penalty2(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set r1(arg0) {
        wasm.__wbg_set_ratesview_r1(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set r2(arg0) {
        wasm.__wbg_set_ratesview_r2(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set r_comb_1(arg0) {
        wasm.__wbg_set_ratesview_r_comb_1(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set r_comb_2(arg0) {
        wasm.__wbg_set_ratesview_r_comb_2(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set ratio(arg0) {
        wasm.__wbg_set_ratesview_ratio(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set sigma_star_sq(arg0) {
        wasm.__wbg_set_ratesview_sigma_star_sq(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) RatesView.prototype[Symbol.dispose] = RatesView.prototype.free;

/**
 * Joint histogram of message bins against the wrap with dithers removed.
 * @param {number} k
 * @param {number} samples
 * @param {number} seed
 * @param {boolean} masked
 * @returns {CryptoView}
 */
export function crypto_histogram(k, samples, seed, masked) {
    const ret = wasm.crypto_histogram(k, samples, seed, masked);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return CryptoView.__wrap(ret[0]);
}

/**
 * Secure rates for symmetric direct gain 1 and cross gain `cross`.
 * A non-positive `gamma_sq` selects the default `1/(h21^2 p)`.
 * @param {number} cross
 * @param {number} p_db
 * @param {number} gamma_sq
 * @returns {RatesView}
 */
export function rates_explorer(cross, p_db, gamma_sq) {
    const ret = wasm.rates_explorer(cross, p_db, gamma_sq);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return RatesView.__wrap(ret[0]);
}

/**
 * Flattened rows `(log10 P, sum rate, r_comb_2, penalty, ratio)` for a
 * sweep at fixed regime ratio.
 * @param {number} ratio
 * @param {number} log10_lo
 * @param {number} log10_hi
 * @param {number} points
 * @param {number} gamma_sq
 * @returns {Float64Array}
 */
export function sdof_curve(ratio, log10_lo, log10_hi, points, gamma_sq) {
    const ret = wasm.sdof_curve(ratio, log10_lo, log10_hi, points, gamma_sq);
    if (ret[3]) {
        throw takeFromExternrefTable0(ret[2]);
    }
    var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
    wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
    return v1;
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg_Error_92b29b0548f8b746: function(arg0, arg1) {
            const ret = Error(getStringFromWasm0(arg0, arg1));
            return ret;
        },
        __wbg___wbindgen_throw_344f42d3211c4765: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./latsec_wasm_bg.js": import0,
    };
}

const CryptoViewFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_cryptoview_free(ptr, 1));
const RatesViewFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_ratesview_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function takeFromExternrefTable0(idx) {
    const value = wasm.__wbindgen_externrefs.get(idx);
    wasm.__externref_table_dealloc(idx);
    return value;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = module.ok && expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('latsec_wasm_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
