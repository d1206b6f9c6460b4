type nat lf-obj -> o.
type z lf-obj.
type s lf-obj -> lf-obj.
type list lf-obj -> o.
type nil lf-obj.
type cons lf-obj -> lf-obj -> lf-obj.
type append lf-obj -> lf-obj -> lf-obj -> lf-obj -> o.
type appNil lf-obj -> lf-obj.
type appCons lf-obj -> lf-obj -> lf-obj -> lf-obj -> lf-obj -> lf-obj.

nat z.
pi n\ nat n => nat (s n).
list nil.
pi n\ nat n => pi l\ list l => list (cons n l).
pi k\ true => append (appNil k) nil k k.
pi x\ true => pi l\ true => pi k\ true => pi m\ true => pi a\ append a l k m => append (appCons x l k m a) (cons x l) k (cons x m).
