from carleson.render.figures import FigureKind, FigureSpec, render_figure, write_figure
from carleson.runner.base.command import Command
from carleson.runner.output import OutputRecord
from carleson.utils.constants import ExitCodes, RenderDefaults


class RenderCommand(Command):

    def __init__(self, top_parser, subparser):
        super().__init__(top_parser, subparser)
        self.command = 'render'
        self.help = 'Draws a window figure as SVG.'
        self.flags = [
            {'command': '--kind', 'help': 'Figure to draw.', 'type': str, 'required': True,
             'choices': [kind.value for kind in FigureKind]},
            {'command': '--h', 'help': 'Height h in (0, 1).', 'type': float, 'required': True},
            {'command': '--c', 'help': 'Constant c > 1, needed by fig2 and fig3.', 'type': float},
            {'command': '--out', 'help': 'SVG file to write. Standard output when omitted.',
             'type': str, 'metavar': 'SVG_PATH'},
            {'command': '--canvas-px', 'help': 'Width and height of the drawing in pixels.',
             'type': int, 'default': RenderDefaults.CANVAS_PX},
            {'command': '--no-labels', 'help': 'Leave out the point labels.',
             'action': 'store_true'},
        ]

        self.add_subcommand()

    def run(self, args):
        spec = FigureSpec(args.kind, args.h, args.c, show_labels=not args.no_labels,
                          canvas_px=args.canvas_px, base=self.base_point(args))
        if args.out is None:
            print(render_figure(spec), end='')
            return ExitCodes.OK

        write_figure(spec, args.out)
        record = OutputRecord(self.command).update(kind=args.kind, h=args.h, c=args.c,
                                                   out=args.out)
        self.emit(record, args)
        return ExitCodes.OK
