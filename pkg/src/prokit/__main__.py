import prokit.app

prokit.app.main()
