from importlib import import_module as _import_module

dict_is_density={}
dict_outcome_values={}
dict_p_plus={}
dict_p_minus={}
dict_dp_plus={}
dict_fisher_limit={}
dict_analytic_signal={}
dict_analytic_sensitivity={}
dict_analytic_fwhm={}
dict_analytic_optimum={}

_base_package = __name__
_schemes_apis_modules = {
        'homodyne-window':'api_homodyne_window',
        'homodyne-zero':'api_homodyne_zero',
        'parity':'api_parity',
        'zero-nonzero':'api_zero_nonzero',
        }

def load_scheme(scheme):

    api = _import_module('.'+_schemes_apis_modules[scheme], _base_package)

    dict_is_density[scheme] = api.is_density
    dict_outcome_values[scheme] = api.outcome_values
    dict_p_plus[scheme] = api.p_plus
    dict_p_minus[scheme] = api.p_minus
    dict_dp_plus[scheme] = api.dp_plus
    dict_fisher_limit[scheme] = api.fisher_limit
    dict_analytic_signal[scheme] = api.analytic_signal
    dict_analytic_sensitivity[scheme] = api.analytic_sensitivity
    dict_analytic_fwhm[scheme] = api.analytic_fwhm
    dict_analytic_optimum[scheme] = api.analytic_optimum

    del(api)

    pass

for _scheme in _schemes_apis_modules:
    load_scheme(_scheme)

del(_scheme)
